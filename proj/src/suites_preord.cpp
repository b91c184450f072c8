// Suites over PreOrd: enumeration, clopen calculus, the pretorsion theory and
// the Z-cokernel characterization.

#include <random>
#include <set>

#include "lab_internal.hpp"

namespace prestab::detail {

  namespace {
    constexpr std::size_t known_counts[] = {1, 1, 4, 29, 355};

    // The relation on `target` obtained by placing rho_B and rho_C side by
    // side, where B and C partition target.
    Rel recompose(Rel const& rho, Subset const& target, Subset const& b,
                  Subset const& c) {
      auto const               members = target.members();
      std::vector<std::size_t> position(rho.size(), 0);
      for (std::size_t k = 0; k < members.size(); ++k) {
        position[members[k]] = k;
      }
      Rel out(members.size());
      for (auto const* part : {&b, &c}) {
        auto const pm = part->members();
        Rel const  r  = restrict_rel(rho, *part);
        for (std::size_t i = 0; i < pm.size(); ++i) {
          for (std::size_t j = 0; j < pm.size(); ++j) {
            if (r.test(i, j)) {
              out.set(position[pm[i]], position[pm[j]]);
            }
          }
        }
      }
      return out;
    }

    // b re-indexed as a subset of x (b inside x).
    Subset reindex(Subset const& b, Subset const& x) {
      auto const members = x.members();
      Subset     out(members.size());
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (b.contains(members[k])) {
          out.insert(k);
        }
      }
      return out;
    }

    // The copair of the two inclusions (B, rho_B) + (B^c, rho_B^c) -> A is an
    // isomorphism of preorders.
    bool is_complemented(Preorder const& a, Subset const& b) {
      auto const bc  = b.complement();
      auto const sum = coproduct(restrict(a, b), restrict(a, bc));
      auto const h   = copair(sum, inclusion(a, b), inclusion(a, bc));
      return image_rel(h.map(), sum.object.rel()) == a.rel();
    }

    bool union_of_components(Preorder const& a, Subset const& b) {
      auto const roots = oracle::component_roots(a.rel());
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
          if (roots[i] == roots[j] && b.contains(i) != b.contains(j)) {
            return false;
          }
        }
      }
      return true;
    }

    bool trivial_map(Rel const& rho, std::span<std::size_t const> f) {
      for (std::size_t a = 0; a < rho.size(); ++a) {
        for (std::size_t b = 0; b < rho.size(); ++b) {
          if (rho.test(a, b) && f[a] != f[b]) {
            return false;
          }
        }
      }
      return true;
    }

    Preorder random_preorder(std::mt19937_64& rng, std::size_t n) {
      std::bernoulli_distribution coin(0.15);
      Rel                         r = delta(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (coin(rng)) {
            r.set(i, j);
          }
        }
      }
      return Preorder(transitive_closure(r));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////

  void suite_enumeration(SuiteContext& ctx) {
    for (std::size_t n = 0; n <= ctx.max_size(); ++n) {
      ctx.checked();
      auto const scan  = enumerate_preorders(n);
      auto const again = enumerate_preorders(n);
      std::string const at = "n=" + std::to_string(n) + ": ";
      if (scan != again) {
        ctx.fail(at + "two scans differ in content or order");
      }
      if (scan.size() != known_counts[n]) {
        ctx.fail(at + std::to_string(scan.size()) + " preorders, expected "
                 + std::to_string(known_counts[n]));
      }

      // Every n x n boolean matrix, filtered by reflexivity and transitivity.
      std::set<std::vector<bool>> brute;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n));
           ++mask) {
        auto const m = [&](std::size_t i, std::size_t j) {
          return ((mask >> (i * n + j)) & 1U) != 0;
        };
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          ok = m(i, i);
        }
        for (std::size_t i = 0; i < n && ok; ++i) {
          for (std::size_t j = 0; j < n && ok; ++j) {
            for (std::size_t k = 0; k < n && ok; ++k) {
              ok = !(m(i, j) && m(j, k)) || m(i, k);
            }
          }
        }
        if (ok) {
          std::vector<bool> bits(n * n);
          for (std::size_t b = 0; b < n * n; ++b) {
            bits[b] = (mask >> b) & 1U;
          }
          brute.insert(std::move(bits));
        }
      }
      std::set<std::vector<bool>> ours;
      for (auto const& p : scan) {
        std::vector<bool> bits(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            bits[i * n + j] = p.leq(i, j);
          }
        }
        ours.insert(std::move(bits));
      }
      if (ours.size() != scan.size()) {
        ctx.fail(at + "scan contains duplicates");
      }
      if (ours != brute) {
        ctx.fail(at + "scan disagrees with the matrix scan ("
                 + std::to_string(brute.size()) + " preorders)");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_clopen_calculus(SuiteContext& ctx) {
    for (auto const& a : ctx.family.preorders()) {
      std::size_t const n    = a.size();
      std::size_t const subs = std::size_t{1} << n;
      std::vector<char> open(subs), clopen(subs);
      for (std::size_t m = 0; m < subs; ++m) {
        auto const b = Subset::from_mask(n, m);
        open[m]      = is_open(a, b);
        clopen[m]    = is_clopen(a, b);
      }
      auto const at = [&](std::size_t m) {
        return to_string(a) + " B=" + subset_string(Subset::from_mask(n, m));
      };
      std::size_t const full = subs - 1;
      for (std::size_t b = 0; b < subs; ++b) {
        ctx.checked();
        if (clopen[b] && !clopen[full & ~b]) {
          ctx.fail("complement: " + at(b) + " clopen, complement not");
        }
        for (std::size_t c = 0; c < subs; ++c) {
          if (open[b] && open[c] && !(open[b | c] && open[b & c])) {
            ctx.fail("open lattice: " + at(b) + " C="
                     + subset_string(Subset::from_mask(n, c)));
          }
          if (clopen[b] && clopen[c] && !(clopen[b | c] && clopen[b & c])) {
            ctx.fail("clopen lattice: " + at(b) + " C="
                     + subset_string(Subset::from_mask(n, c)));
          }
          // disjoint clopen B, C: rho on B u C is rho_B + rho_C
          if (clopen[b] && clopen[c] && (b & c) == 0) {
            auto const bs = Subset::from_mask(n, b);
            auto const cs = Subset::from_mask(n, c);
            auto const u  = bs | cs;
            if (recompose(a.rel(), u, bs, cs) != restrict_rel(a.rel(), u)) {
              ctx.fail("disjoint decomposition: " + at(b) + " C="
                       + subset_string(cs));
            }
          }
        }
        auto const bs = Subset::from_mask(n, b);
        if (clopen[b]) {
          auto const full_set = Subset::full(n);
          if (recompose(a.rel(), full_set, bs, bs.complement()) != a.rel()) {
            ctx.fail("decomposition: " + at(b));
          }
        }
        // B open (clopen) in A stays so in every X between B and A
        for (std::size_t x = 0; x < subs; ++x) {
          if ((x & b) != b) {
            continue;
          }
          auto const xs  = Subset::from_mask(n, x);
          auto const ax  = restrict(a, xs);
          auto const bx  = reindex(bs, xs);
          if (open[b] && !is_open(ax, bx)) {
            ctx.fail("open in subobject: " + at(b) + " X=" + subset_string(xs));
          }
          if (clopen[b] && !is_clopen(ax, bx)) {
            ctx.fail("clopen in subobject: " + at(b)
                     + " X=" + subset_string(xs));
          }
        }
      }
    }

    // inverse images along morphisms
    auto const objects = ctx.morphism_objects();
    for (std::size_t xi = 0; xi < objects.size(); ++xi) {
      for (std::size_t ai = 0; ai < objects.size(); ++ai) {
        auto const& a = objects[ai];
        for (auto const& f : ctx.family.morphisms(xi, ai)) {
          ctx.checked();
          for (std::size_t m = 0; m < (std::size_t{1} << a.size()); ++m) {
            auto const b  = Subset::from_mask(a.size(), m);
            auto const pb = preimage(f.map(), b);
            if (is_open(a, b) && !is_open(f.dom(), pb)) {
              ctx.fail("open inverse image: " + describe(f) + " B="
                       + subset_string(b));
            }
            if (is_clopen(a, b) && !is_clopen(f.dom(), pb)) {
              ctx.fail("clopen inverse image: " + describe(f) + " B="
                       + subset_string(b));
            }
          }
        }
      }
    }

    // coproducts are computed componentwise
    auto const probes = ctx.probes();
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        ctx.checked();
        auto const  c  = coproduct(a, b);
        auto const  at = to_string(a) + " + " + to_string(b);
        auto const  l  = image(c.left.map(), Subset::full(a.size()));
        auto const  r  = image(c.right.map(), Subset::full(b.size()));
        if (restrict(c.object, l).rel() != a.rel()
            || restrict(c.object, r).rel() != b.rel()) {
          ctx.fail("coproduct restriction: " + at);
        }
        if (!is_clopen(c.object, l) || !is_clopen(c.object, r)) {
          ctx.fail("coproduct summands not clopen: " + at);
        }
        if (a.size() + b.size() > 4) {
          continue;
        }
        for (auto const& p : probes) {
          auto const from_sum = enumerate_morphisms(c.object, p).size();
          auto const fa       = enumerate_morphisms(a, p);
          auto const fb       = enumerate_morphisms(b, p);
          if (from_sum != fa.size() * fb.size()) {
            ctx.fail("coproduct universal property: " + at + " into "
                     + to_string(p) + ": " + std::to_string(from_sum)
                     + " maps, " + std::to_string(fa.size() * fb.size())
                     + " pairs");
          }
          for (auto const& f : fa) {
            for (auto const& g : fb) {
              auto const h = copair(c, f, g);
              if (compose(h, c.left) != f || compose(h, c.right) != g) {
                ctx.fail("copair does not restrict: " + at);
              }
            }
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_clopen_agreement(SuiteContext& ctx) {
    auto const check = [&](Preorder const& a, Subset const& b, bool random) {
      bool const clopen    = is_clopen(a, b);
      bool const fibration = is_fibration_pair(a, b);
      bool const squares   = square_is_pullback(a, b, Square::I)
                           && square_is_pullback(a, b, Square::II)
                           && square_is_pullback(a, b, Square::III)
                           && square_is_pullback(a, b, Square::IV);
      bool const components = union_of_components(a, b);
      bool const complemented = is_complemented(a, b);
      if (!(clopen == fibration && clopen == squares && clopen == components
            && clopen == complemented)) {
        ctx.fail(std::string(random ? "random " : "") + to_string(a) + " B="
                 + subset_string(b) + ": clopen=" + std::to_string(clopen)
                 + " fibration=" + std::to_string(fibration) + " squares="
                 + std::to_string(squares) + " components="
                 + std::to_string(components) + " complemented="
                 + std::to_string(complemented));
      }
    };

    for (auto const& a : ctx.family.preorders()) {
      // blocks of clopen_components against the union-find partition
      auto const roots = oracle::component_roots(a.rel());
      auto const part  = clopen_components(a);
      for (auto const& block : part.blocks) {
        auto const m = block.members();
        for (auto i : m) {
          if (roots[i] != roots[m.front()]) {
            ctx.fail("components: " + to_string(a) + " block "
                     + subset_string(block) + " is not connected");
          }
        }
      }
      std::set<std::size_t> distinct(roots.begin(), roots.end());
      if (distinct.size() != part.blocks.size()) {
        ctx.fail("components: " + to_string(a) + " has "
                 + std::to_string(distinct.size()) + " components, got "
                 + std::to_string(part.blocks.size()) + " blocks");
      }
      for (std::size_t m = 0; m < (std::size_t{1} << a.size()); ++m) {
        ctx.checked();
        check(a, Subset::from_mask(a.size(), m), false);
      }
    }

    // random preorders one size up to 8
    std::mt19937_64 rng(ctx.opts.seed);
    std::size_t const lo = ctx.max_size() + 1;
    if (lo <= 8) {
      std::uniform_int_distribution<std::size_t> size_dist(lo, 8);
      for (std::size_t t = 0; t < ctx.opts.random_trials; ++t) {
        ctx.checked_random();
        auto const a = random_preorder(rng, size_dist(rng));
        std::uniform_int_distribution<std::uint64_t> mask_dist(
            0, (std::uint64_t{1} << a.size()) - 1);
        auto b = Subset::from_mask(a.size(), mask_dist(rng));
        // bias half the trials towards clopen subsets
        if (t % 2 == 1) {
          b = Subset(a.size());
          for (auto const& k : a.components()) {
            if (rng() & 1U) {
              b |= k;
            }
          }
        }
        check(a, b, true);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_pretorsion(SuiteContext& ctx) {
    auto const probes = ctx.probes();
    for (auto const& a : ctx.family.preorders()) {
      ctx.checked();
      auto const seq = torsion_sequence(a);
      auto const at  = to_string(a);
      auto const& kernel_object   = seq.kernel_part.dom();
      auto const& quotient_object = seq.quotient_part.cod();

      // the kernel object carries rho n rho°
      oracle::Pairs sym;
      for (auto [i, j] : oracle::pairs_of(a.rel())) {
        if (a.leq(j, i)) {
          sym.emplace(i, j);
        }
      }
      if (oracle::pairs_of(kernel_object.rel()) != sym) {
        ctx.fail("kernel object of " + at + " is not rho n rho°");
      }
      if (!classify(kernel_object).is_equivalence_object) {
        ctx.fail("kernel object of " + at + " is not an equivalence relation");
      }
      if (!classify(quotient_object).is_partial_order_object) {
        ctx.fail("quotient object of " + at + " is not a partial order");
      }
      if (a.size() <= std::min(ctx.max_size(), ctx.opts.morphism_max_size)) {
        if (auto why = z_exact_failure(seq, probes)) {
          ctx.fail("torsion sequence of " + at + ": " + *why);
        }
      }
    }

    // Eq -> ParOrd maps are trivial
    auto const objects = ctx.morphism_objects();
    for (std::size_t ei = 0; ei < objects.size(); ++ei) {
      if (!classify(objects[ei]).is_equivalence_object) {
        continue;
      }
      for (std::size_t pi = 0; pi < objects.size(); ++pi) {
        if (!classify(objects[pi]).is_partial_order_object) {
          continue;
        }
        for (auto const& f : ctx.family.morphisms(ei, pi)) {
          ctx.checked();
          if (!is_trivial(f)) {
            ctx.fail("non-trivial map from an equivalence relation to a "
                     "partial order: "
                     + describe(f));
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_epi_mono(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    for (std::size_t yi = 0; yi < objects.size(); ++yi) {
      for (std::size_t xi = 0; xi < objects.size(); ++xi) {
        auto const& rho = objects[xi].rel();
        for (auto const& f : ctx.family.morphisms(xi, yi)) {
          bool const f_trivial = is_trivial(f);
          bool const f_hat_onto =
              image_rel(f.map(), rho) == objects[yi].rel();
          for (std::size_t zi = 0; zi < objects.size(); ++zi) {
            for (auto const& g : ctx.family.morphisms(yi, zi)) {
              ctx.checked();
              std::vector<std::size_t> gf(f.map().dom_size());
              for (std::size_t i = 0; i < gf.size(); ++i) {
                gf[i] = g[f[i]];
              }
              if (!trivial_map(rho, gf)) {
                continue;
              }
              if (is_injective(g.map()) && !f_trivial) {
                ctx.fail("g injective, g f trivial, f not trivial: f = "
                         + describe(f) + ", g = " + describe(g));
              }
              if (f_hat_onto && !is_trivial(g)) {
                ctx.fail("f onto on pairs, g f trivial, g not trivial: f = "
                         + describe(f) + ", g = " + describe(g));
              }
            }
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_cokernel_characterization(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    auto const probes  = ctx.probes();
    for (std::size_t ai = 0; ai < objects.size(); ++ai) {
      for (std::size_t bi = 0; bi < objects.size(); ++bi) {
        auto const& b = objects[bi];
        for (auto const& f : ctx.family.morphisms(ai, bi)) {
          ctx.checked();
          auto const at = describe(f);
          std::optional<ZCokernelTrace> trace;
          try {
            trace = z_cokernel_trace(f, ctx.opts.cokernel_closure);
          } catch (validation_error const& e) {
            ctx.fail("construction: " + at + ": " + e.what());
            continue;
          }
          auto const& q = trace->q;

          // (a) q is the coequalizer of f r1, f r2: its fibres are the
          // classes generated by f(rho), and it is onto.
          oracle::UnionFind uf(b.size());
          auto const f_rho = oracle::image(f.map().targets(),
                                           oracle::pairs_of(f.dom().rel()));
          for (auto [x, y] : f_rho) {
            uf.unite(x, y);
          }
          bool coequalizer = is_surjective(q.map());
          for (std::size_t x = 0; x < b.size(); ++x) {
            for (std::size_t y = 0; y < b.size(); ++y) {
              if ((uf.find(x) == uf.find(y)) != (q[x] == q[y])) {
                coequalizer = false;
              }
            }
          }
          if (!coequalizer) {
            ctx.fail("(a) not the coequalizer: " + at + " q="
                     + map_string(q.map().targets()));
          }

          // (b) the closure used is the transitive closure of sigma u f(rho)°
          oracle::Pairs u = oracle::pairs_of(b.rel());
          for (auto [x, y] : f_rho) {
            u.emplace(y, x);
          }
          auto const u_bar = oracle::transitive_closure(u);
          if (oracle::pairs_of(trace->u_closure) != u_bar) {
            ctx.fail("(b) closure of U is not transitive closure: " + at);
          }

          // (c) tau = q(U-bar)
          if (oracle::pairs_of(q.cod().rel())
              != oracle::image(q.map().targets(), u_bar)) {
            ctx.fail("(c) tau differs from q(U-bar): " + at + " tau="
                     + to_string(q.cod()));
          }

          if (auto why = z_universal_failure(q, f, UniversalSide::cokernel,
                                             probes)) {
            ctx.fail("universal property: " + at + ": " + *why);
          }
        }
      }
    }
  }

}  // namespace prestab::detail

// Suites over the stable category: zero laws, the congruence, canonical
// forms, and what sigma preserves.

#include <random>
#include <set>

#include "lab_internal.hpp"

namespace prestab::detail {

  namespace {
    // Partial morphisms between members of an object list, generated on
    // first use.
    class PartialIndex {
     public:
      explicit PartialIndex(std::span<Preorder const> objects)
          : _objects(objects), _slots(objects.size() * objects.size()) {}

      std::vector<PartialMorphism> const& operator()(std::size_t from,
                                                     std::size_t to) {
        auto& slot = _slots[from * _objects.size() + to];
        if (!slot) {
          slot = enumerate_partial(_objects[from], _objects[to]);
        }
        return *slot;
      }

     private:
      std::span<Preorder const>                                _objects;
      std::vector<std::optional<std::vector<PartialMorphism>>> _slots;
    };

    bool constant_on(PartialMorphism const& p, Subset const& k) {
      auto const v = p.values();
      auto const m = k.members();
      for (auto i : m) {
        if (v[i] != v[m.front()]) {
          return false;
        }
      }
      return true;
    }

    bool congruent_pair(PartialMorphism const& a, PartialMorphism const& b) {
      return congruent(a, b).has_value();
    }

    std::string pair_string(PartialMorphism const& a,
                            PartialMorphism const& b) {
      return to_string(a) + " and " + to_string(b);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////

  void suite_zero_laws(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    StableHoms homs;
    for (auto const& a : objects) {
      ctx.checked();
      if (is_zero(stab_identity(a)) != classify(a).is_discrete) {
        ctx.fail("sigma(A) is zero iff A is discrete: " + to_string(a));
      }
      // the empty preorder is a zero object
      Preorder const zero;
      if (homs(zero, a).size() != 1 || homs(a, zero).size() != 1) {
        ctx.fail("empty preorder is not a zero object against "
                 + to_string(a));
      }
    }
    for (std::size_t ai = 0; ai < objects.size(); ++ai) {
      for (std::size_t bi = 0; bi < objects.size(); ++bi) {
        for (auto const& p : enumerate_partial(objects[ai], objects[bi])) {
          ctx.checked();
          if (is_zero(canonicalize(p)) != is_trivial(p.total_part())) {
            ctx.fail("zero iff trivial on the domain of definition: "
                     + to_string(p));
          }
        }
        for (auto const& f : ctx.family.morphisms(ai, bi)) {
          ctx.checked();
          if (is_zero(sigma(f)) != is_trivial(f)) {
            ctx.fail("sigma(f) zero iff f trivial: " + describe(f));
          }
          if (is_zero(zero_morphism(objects[ai], objects[bi])) == false) {
            ctx.fail("zero_morphism is not zero");
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_congruence_laws(SuiteContext& ctx) {
    auto const   objects = ctx.morphism_objects();
    PartialIndex partials(objects);
    std::size_t const count = objects.size();

    for (std::size_t ai = 0; ai < count; ++ai) {
      for (std::size_t bi = 0; bi < count; ++bi) {
        auto const&       ps = partials(ai, bi);
        std::size_t const n  = ps.size();
        std::vector<char> c(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            c[i * n + j] = congruent_pair(ps[i], ps[j]);
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          ctx.checked();
          if (!c[i * n + i]) {
            ctx.fail("reflexivity: " + to_string(ps[i]));
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (c[i * n + j] != c[j * n + i]) {
              ctx.fail("symmetry: " + pair_string(ps[i], ps[j]));
            }
            if (!c[i * n + j]) {
              continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
              if (c[j * n + k] && !c[i * n + k]) {
                ctx.fail("transitivity: " + pair_string(ps[i], ps[j])
                         + " and " + to_string(ps[k]));
              }
            }
            // compatibility on both sides
            for (std::size_t ci = 0; ci < count; ++ci) {
              for (auto const& g : partials(bi, ci)) {
                if (!congruent_pair(compose_partial(g, ps[i]),
                                    compose_partial(g, ps[j]))) {
                  ctx.fail("left compatibility: " + pair_string(ps[i], ps[j])
                           + " after " + to_string(g));
                }
              }
            }
            for (std::size_t zi = 0; zi < count; ++zi) {
              for (auto const& h : partials(zi, ai)) {
                if (!congruent_pair(compose_partial(ps[i], h),
                                    compose_partial(ps[j], h))) {
                  ctx.fail("right compatibility: " + pair_string(ps[i], ps[j])
                           + " before " + to_string(h));
                }
              }
            }
          }
        }
      }
    }

    // randomized trials one size up
    std::size_t const n = ctx.max_size() + 1;
    if (n > max_enumerable_size) {
      return;
    }
    auto const       level = enumerate_preorders(n);
    PartialIndex     big(level);
    std::mt19937_64  rng(ctx.opts.seed);
    auto const pick = [&](std::size_t bound) {
      return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
    };
    // a random element of ps, half the time among those congruent to p
    auto const partner = [&](std::vector<PartialMorphism> const& ps,
                             PartialMorphism const&              p)
        -> PartialMorphism const& {
      if (rng() & 1U) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (congruent_pair(p, ps[i])) {
            hits.push_back(i);
          }
        }
        return ps[hits[pick(hits.size())]];
      }
      return ps[pick(ps.size())];
    };

    for (std::size_t t = 0; t < ctx.opts.random_trials; ++t) {
      ctx.checked_random();
      auto const  ai = pick(level.size());
      auto const  bi = pick(level.size());
      auto const  ci = pick(level.size());
      auto const  zi = pick(level.size());
      auto const& ps = big(ai, bi);
      auto const& p1 = ps[pick(ps.size())];
      auto const& p2 = partner(ps, p1);
      auto const& p3 = partner(ps, p2);
      auto const& gs = big(bi, ci);
      auto const& hs = big(zi, ai);
      auto const& g  = gs[pick(gs.size())];
      auto const& h  = hs[pick(hs.size())];

      bool const c12 = congruent_pair(p1, p2);
      bool const c23 = congruent_pair(p2, p3);
      if (!congruent_pair(p1, p1)) {
        ctx.fail("random reflexivity: " + to_string(p1));
      }
      if (c12 != congruent_pair(p2, p1)) {
        ctx.fail("random symmetry: " + pair_string(p1, p2));
      }
      if (c12 && c23 && !congruent_pair(p1, p3)) {
        ctx.fail("random transitivity: " + pair_string(p1, p2) + " and "
                 + to_string(p3));
      }
      if (c12
          && !congruent_pair(compose_partial(g, p1), compose_partial(g, p2))) {
        ctx.fail("random left compatibility: " + pair_string(p1, p2)
                 + " after " + to_string(g));
      }
      if (c12
          && !congruent_pair(compose_partial(p1, h), compose_partial(p2, h))) {
        ctx.fail("random right compatibility: " + pair_string(p1, p2)
                 + " before " + to_string(h));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_canonical_forms(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        auto const ps = enumerate_partial(a, b);
        std::vector<StableMorphism> canon;
        canon.reserve(ps.size());
        for (auto const& p : ps) {
          canon.push_back(canonicalize(p));
          auto const& u = canon.back().underlying();
          for (auto const& k : a.components()) {
            if (k.is_subset_of(p.domain())
                && is_trivial_on(p, k) != constant_on(p, k)) {
              ctx.fail("trivial differs from constant on a component: "
                       + to_string(p) + " K=" + subset_string(k));
            }
            if (k.is_subset_of(u.domain()) && is_trivial_on(u, k)) {
              ctx.fail("canonical form keeps a trivial component: "
                       + to_string(p) + " K=" + subset_string(k));
            }
          }
          if (!congruent_pair(p, u)) {
            ctx.fail("canonical form not congruent to its source: "
                     + to_string(p));
          }
        }
        for (std::size_t i = 0; i < ps.size(); ++i) {
          for (std::size_t j = i; j < ps.size(); ++j) {
            ctx.checked();
            bool const same   = canon[i] == canon[j];
            bool const search = congruent_by_search(ps[i], ps[j]).has_value();
            bool const fast   = congruent_pair(ps[i], ps[j]);
            if (same != search || fast != search) {
              ctx.fail("canonical equality " + std::to_string(same)
                       + ", search " + std::to_string(search)
                       + ", per component " + std::to_string(fast) + ": "
                       + pair_string(ps[i], ps[j]));
            }
          }
        }
        if (enumerate_stable(a, b) != enumerate_stable_naive(a, b)) {
          ctx.fail("direct and naive stable hom-sets differ: " + to_string(a)
                   + " to " + to_string(b));
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_coincidence(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    for (std::size_t ai = 0; ai < objects.size(); ++ai) {
      for (std::size_t bi = 0; bi < objects.size(); ++bi) {
        auto const&                 fs = ctx.family.morphisms(ai, bi);
        std::vector<StableMorphism> sig;
        for (auto const& f : fs) {
          sig.push_back(sigma(f));
        }
        for (std::size_t i = 0; i < fs.size(); ++i) {
          for (std::size_t j = 0; j < fs.size(); ++j) {
            ctx.checked();
            bool const same = sig[i] == sig[j];
            bool const ff   = ff_related(fs[i], fs[j]);
            bool const search =
                congruent_by_search(embed(fs[i]), embed(fs[j])).has_value();
            if (same != ff || ff != search) {
              ctx.fail("sigma equal " + std::to_string(same) + ", ff_related "
                       + std::to_string(ff) + ", clopen search "
                       + std::to_string(search) + ": " + describe(fs[i])
                       + " vs " + map_string(fs[j].map().targets()));
            }
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_sigma_mono(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    auto const probes  = ctx.probes();
    StableHoms homs;
    for (std::size_t ai = 0; ai < objects.size(); ++ai) {
      for (std::size_t bi = 0; bi < objects.size(); ++bi) {
        for (auto const& f : ctx.family.morphisms(ai, bi)) {
          if (!is_injective(f.map())) {
            continue;
          }
          ctx.checked();
          if (auto why = mono_failure(sigma(f), probes, homs)) {
            ctx.fail("sigma(" + describe(f) + ") is not mono: " + *why);
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_sigma_coproduct(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    auto const probes  = ctx.probes();
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        ctx.checked();
        // hom-sets out of the sum are large and used once
        StableHoms homs;
        if (auto why = coproduct_failure(coproduct(a, b), probes, homs)) {
          ctx.fail(to_string(a) + " + " + to_string(b) + ": " + *why);
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_kernel_preservation(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    auto const probes  = ctx.probes();
    StableHoms homs;
    for (std::size_t ai = 0; ai < objects.size(); ++ai) {
      for (std::size_t bi = 0; bi < objects.size(); ++bi) {
        for (auto const& f : ctx.family.morphisms(ai, bi)) {
          ctx.checked();
          if (auto why = kernel_failure(sigma(z_kernel(f)), sigma(f), probes,
                                        homs)) {
            ctx.fail("sigma of the Z-kernel of " + describe(f) + ": " + *why);
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_cokernel_stab(SuiteContext& ctx) {
    auto const objects = ctx.morphism_objects();
    auto const probes  = ctx.probes();
    StableHoms homs;
    for (auto const& a : objects) {
      for (auto const& b : objects) {
        for (auto const& s : homs(a, b)) {
          ctx.checked();
          try {
            auto const c = stab_cokernel(s, ctx.opts.cokernel_closure);
            if (auto why = cokernel_failure(c, s, probes, homs)) {
              ctx.fail("cokernel of " + to_string(s) + ": " + *why);
            }
          } catch (validation_error const& e) {
            ctx.fail("cokernel of " + to_string(s) + ": " + e.what());
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////

  void suite_exactness(SuiteContext& ctx) {
    auto const probes  = ctx.probes();
    auto const objects = ctx.morphism_objects();
    StableHoms homs;

    // the Z-exact sequence (Z-ker q, q) for q the Z-cokernel of f
    auto const check_cokernel_sequence = [&](Morphism const& f) {
      try {
        auto q = z_cokernel(f, ctx.opts.cokernel_closure);
        ZExactSequence const seq{z_kernel(q), std::move(q)};
        if (auto why = z_exact_failure(seq, probes)) {
          ctx.fail("sequence through the Z-cokernel of " + describe(f)
                   + " is not Z-exact: " + *why);
        } else if (auto why2 = exactness_failure(seq, probes, homs)) {
          ctx.fail("sequence through the Z-cokernel of " + describe(f)
                   + ": " + *why2);
        }
      } catch (validation_error const& e) {
        ctx.fail("Z-cokernel of " + describe(f) + ": " + e.what());
      }
    };

    for (std::size_t ai = 0; ai < ctx.family.preorders().size(); ++ai) {
      auto const& a = ctx.family.preorders()[ai];
      ctx.checked();
      if (auto why = exactness_failure(torsion_sequence(a), probes, homs)) {
        ctx.fail("torsion sequence of " + to_string(a) + ": " + *why);
      }
      if (ai >= objects.size()) {
        continue;
      }
      // every Z-exact sequence ending in a; q depends only on f(rho)
      std::set<Rel> seen;
      for (std::size_t xi = 0; xi < objects.size(); ++xi) {
        for (auto const& f : ctx.family.morphisms(xi, ai)) {
          if (seen.insert(image_rel(f.map(), f.dom().rel())).second) {
            check_cokernel_sequence(f);
          }
        }
      }
    }

    // seeded spot checks with middle objects one size up
    std::size_t const n = ctx.max_size() + 1;
    if (n > max_enumerable_size) {
      return;
    }
    auto const      level = enumerate_preorders(n);
    std::mt19937_64 rng(ctx.opts.seed);
    std::uniform_int_distribution<std::size_t> pick_b(0, level.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_x(1, objects.size() - 1);
    for (std::size_t t = 0; t < ctx.opts.spot_checks; ++t) {
      ctx.checked_random();
      auto const& b  = level[pick_b(rng)];
      auto const  fs = enumerate_morphisms(objects[pick_x(rng)], b);
      auto const& f  = fs[std::uniform_int_distribution<std::size_t>(
          0, fs.size() - 1)(rng)];
      check_cokernel_sequence(f);
    }
  }

}  // namespace prestab::detail

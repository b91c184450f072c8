#include "prestab/stab.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace prestab {

  StableMorphism canonical_unchecked(PartialMorphism p);

  namespace {
    constexpr std::size_t undefined = PartialMorphism::undefined;

    std::size_t mix(std::size_t seed, std::size_t v) noexcept {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    struct StableHash {
      std::size_t operator()(StableMorphism const& s) const noexcept {
        return hash_value(s);
      }
    };

    struct StablePairHash {
      std::size_t operator()(
          std::pair<StableMorphism, StableMorphism> const& p) const noexcept {
        return mix(hash_value(p.first), hash_value(p.second));
      }
    };

    void require_parallel(PartialMorphism const& p1, PartialMorphism const& p2,
                          char const* what) {
      if (p1.dom() != p2.dom() || p1.cod() != p2.cod()) {
        throw composition_error(std::string(what)
                                + ": partial morphisms are not parallel");
      }
    }

    // Builds a partial morphism from full-length values without checks.
    PartialMorphism from_values_trusted(Preorder const&              dom,
                                        Preorder const&              cod,
                                        std::span<std::size_t const> values) {
      Subset                   domain(dom.size());
      std::vector<std::size_t> targets;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != undefined) {
          domain.insert(i);
          targets.push_back(values[i]);
        }
      }
      auto const k = targets.size();
      return unchecked_partial(dom, cod, std::move(domain),
                               FinMap(k, cod.size(), std::move(targets)));
    }

    bool trivial_on(Rel const& rho, std::span<std::size_t const> values,
                    Subset const& part) {
      auto const members = part.members();
      for (auto i : members) {
        for (auto j : members) {
          if (rho.test(i, j) && values[i] != values[j]) {
            return false;
          }
        }
      }
      return true;
    }

    bool agree_on(std::span<std::size_t const> v1,
                  std::span<std::size_t const> v2,
                  Subset const&                part) {
      for (auto i : part.members()) {
        if (v1[i] != v2[i]) {
          return false;
        }
      }
      return true;
    }

    std::string values_string(std::span<std::size_t const> values) {
      std::string out = "[";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += i == 0 ? "" : ",";
        out += values[i] == undefined ? "_" : std::to_string(values[i]);
      }
      return out + "]";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PartialMorphism
  ////////////////////////////////////////////////////////////////////////

  PartialMorphism::PartialMorphism(Preorder dom, Preorder cod, Subset domain,
                                   FinMap map)
      : _dom(std::move(dom)),
        _cod(std::move(cod)),
        _domain(std::move(domain)),
        _map(std::move(map)) {
    if (_domain.size() != _dom.size()) {
      throw dimension_error("partial morphism: domain subset of size "
                            + std::to_string(_domain.size())
                            + " on an object of size "
                            + std::to_string(_dom.size()));
    }
    if (_map.dom_size() != _domain.count() || _map.cod_size() != _cod.size()) {
      throw dimension_error("partial morphism: map arity does not match");
    }
    if (!is_clopen(_dom, _domain)) {
      throw validation_error("partial morphism: domain of definition is not "
                             "clopen");
    }
    auto const v = values();
    for (auto i : _domain.members()) {
      for (auto j : _domain.members()) {
        if (_dom.leq(i, j) && !_cod.leq(v[i], v[j])) {
          throw validation_error("partial morphism: not monotone at ("
                                 + std::to_string(i) + ", "
                                 + std::to_string(j) + ")");
        }
      }
    }
  }

  std::vector<std::size_t> PartialMorphism::values() const {
    std::vector<std::size_t> v(_dom.size(), undefined);
    std::size_t              k = 0;
    for (auto i : _domain.members()) {
      v[i] = _map[k++];
    }
    return v;
  }

  Morphism PartialMorphism::total_part() const {
    return unchecked_morphism(restrict(_dom, _domain), _cod, _map);
  }

  PartialMorphism unchecked_partial(Preorder dom, Preorder cod, Subset domain,
                                    FinMap map) {
    return PartialMorphism(PartialMorphism::trusted_t{}, std::move(dom),
                           std::move(cod), std::move(domain), std::move(map));
  }

  PartialMorphism partial_from_values(Preorder const&              dom,
                                      Preorder const&              cod,
                                      std::span<std::size_t const> values) {
    if (values.size() != dom.size()) {
      throw dimension_error("partial morphism: expected "
                            + std::to_string(dom.size()) + " values, got "
                            + std::to_string(values.size()));
    }
    Subset                   domain(dom.size());
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] != undefined) {
        domain.insert(i);
        targets.push_back(values[i]);
      }
    }
    auto const k = targets.size();
    return PartialMorphism(dom, cod, std::move(domain),
                           FinMap(k, cod.size(), std::move(targets)));
  }

  std::string to_string(PartialMorphism const& p) {
    return to_string(p.dom()) + " -" + values_string(p.values()) + "-> "
           + to_string(p.cod());
  }

  PartialMorphism embed(Morphism const& f) {
    return unchecked_partial(f.dom(), f.cod(), Subset::full(f.dom().size()),
                             f.map());
  }

  PartialMorphism compose_partial(PartialMorphism const& g,
                                  PartialMorphism const& f) {
    if (f.cod() != g.dom()) {
      throw composition_error("compose: codomain " + to_string(f.cod())
                              + " does not match domain "
                              + to_string(g.dom()));
    }
    auto const               fv = f.values();
    auto const               gv = g.values();
    std::vector<std::size_t> v(fv.size(), undefined);
    for (std::size_t i = 0; i < fv.size(); ++i) {
      if (fv[i] != undefined) {
        v[i] = gv[fv[i]];
      }
    }
    return from_values_trusted(f.dom(), g.cod(), v);
  }

  bool is_trivial_on(PartialMorphism const& p, Subset const& part) {
    return trivial_on(p.dom().rel(), p.values(), part);
  }

  ////////////////////////////////////////////////////////////////////////
  // The congruence
  ////////////////////////////////////////////////////////////////////////

  CongruenceResult congruence(PartialMorphism const& p1,
                              PartialMorphism const& p2) {
    require_parallel(p1, p2, "congruence");
    auto const& a   = p1.dom();
    auto const  v1  = p1.values();
    auto const  v2  = p2.values();
    auto const& rho = a.rel();
    Subset      a0(a.size());

    auto const comps = a.components();
    for (std::size_t c = 0; c < comps.size(); ++c) {
      auto const& k   = comps[c];
      bool const  in1 = k.is_subset_of(p1.domain());
      bool const  in2 = k.is_subset_of(p2.domain());
      bool        ok  = true;
      if (in1 && in2) {
        if (agree_on(v1, v2, k)) {
          a0 |= k;
        } else {
          ok = trivial_on(rho, v1, k) && trivial_on(rho, v2, k);
        }
      } else if (in1) {
        ok = trivial_on(rho, v1, k);
      } else if (in2) {
        ok = trivial_on(rho, v2, k);
      }
      if (!ok) {
        return {std::nullopt, c};
      }
    }
    auto c1 = p1.domain() - a0;
    auto c2 = p2.domain() - a0;
    return {CongruenceWitness{std::move(a0), {std::move(c1), std::move(c2)}},
            std::nullopt};
  }

  std::optional<CongruenceWitness> congruent(PartialMorphism const& p1,
                                             PartialMorphism const& p2) {
    return congruence(p1, p2).witness;
  }

  std::optional<CongruenceWitness> congruent_by_search(PartialMorphism const& p1,
                                                       PartialMorphism const& p2) {
    require_parallel(p1, p2, "congruence");
    auto const& a      = p1.dom();
    auto const  v1     = p1.values();
    auto const  v2     = p2.values();
    auto const  common = (p1.domain() & p2.domain()).members();
    if (common.size() > 20) {
      throw resource_error("congruence search: common domain has "
                           + std::to_string(common.size())
                           + " elements, more than 20");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << common.size());
         ++mask) {
      Subset s(a.size());
      for (std::size_t b = 0; b < common.size(); ++b) {
        if ((mask >> b) & 1U) {
          s.insert(common[b]);
        }
      }
      if (!is_clopen(a, s) || !agree_on(v1, v2, s)) {
        continue;
      }
      auto r1 = p1.domain() - s;
      auto r2 = p2.domain() - s;
      if (trivial_on(a.rel(), v1, r1) && trivial_on(a.rel(), v2, r2)) {
        return CongruenceWitness{std::move(s), {std::move(r1), std::move(r2)}};
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // StableMorphism
  ////////////////////////////////////////////////////////////////////////

  StableMorphism canonical_unchecked(PartialMorphism p) {
    return StableMorphism(std::move(p));
  }

  bool operator<(StableMorphism const& a, StableMorphism const& b) {
    auto const& pa = a.underlying();
    auto const& pb = b.underlying();
    if (pa.domain() != pb.domain()) {
      return pa.domain() < pb.domain();
    }
    return pa.map() < pb.map();
  }

  std::size_t hash_value(StableMorphism const& s) noexcept {
    auto const& p = s.underlying();
    std::size_t h = mix(p.dom().size(), p.cod().size());
    for (auto w : p.domain().words()) {
      h = mix(h, static_cast<std::size_t>(w));
    }
    for (auto t : p.map().targets()) {
      h = mix(h, t);
    }
    return h;
  }

  std::string to_string(StableMorphism const& s) {
    return to_string(s.underlying());
  }

  StableMorphism canonicalize(PartialMorphism const& p) {
    auto const& a   = p.dom();
    auto        v   = p.values();
    auto const& rho = a.rel();
    bool        cut = false;
    for (auto const& k : a.components()) {
      if (k.is_subset_of(p.domain()) && trivial_on(rho, v, k)) {
        for (auto i : k.members()) {
          v[i] = undefined;
        }
        cut = true;
      }
    }
    if (!cut) {
      return StableMorphism(p);
    }
    return StableMorphism(from_values_trusted(a, p.cod(), v));
  }

  StableMorphism sigma(Morphism const& f) {
    return canonicalize(embed(f));
  }

  StableMorphism stab_identity(Preorder const& a) {
    return sigma(Morphism::identity(a));
  }

  StableMorphism stab_compose(StableMorphism const& g,
                              StableMorphism const& f) {
    return canonicalize(compose_partial(g.underlying(), f.underlying()));
  }

  StableMorphism zero_morphism(Preorder const& a, Preorder const& b) {
    return canonical_unchecked(
        unchecked_partial(a, b, Subset(a.size()), FinMap(0, b.size(), {})));
  }

  bool is_zero(StableMorphism const& s) {
    return s.underlying().domain().empty();
  }

  bool ff_related(Morphism const& f, Morphism const& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) {
      throw composition_error("ff_related: morphisms are not parallel");
    }
    return congruent(embed(f), embed(g)).has_value();
  }

  StableMorphism stab_cokernel(StableMorphism const& s, ClosureFn closure) {
    return sigma(z_cokernel(s.underlying().total_part(), closure));
  }

  ////////////////////////////////////////////////////////////////////////
  // Hom-set enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<PartialMorphism> enumerate_partial(Preorder const& from,
                                                 Preorder const& to) {
    std::vector<PartialMorphism> out;
    for (auto const& c : enumerate_clopens(from)) {
      for_each_monotone(restrict(from, c), to, [&](Morphism const& m) {
        out.push_back(unchecked_partial(from, to, c, m.map()));
      });
    }
    return out;
  }

  std::vector<StableMorphism> enumerate_stable(Preorder const& from,
                                               Preorder const& to) {
    auto const comps = from.components();
    // options[c]: the non-trivial monotone maps on component c
    std::vector<std::vector<FinMap>>           options(comps.size());
    std::vector<std::vector<std::size_t>>      members(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      members[c] = comps[c].members();
      for_each_monotone(restrict(from, comps[c]), to, [&](Morphism const& m) {
        if (!is_trivial(m)) {
          options[c].push_back(m.map());
        }
      });
    }

    std::vector<StableMorphism> out;
    // choice[c] == 0 leaves component c out, otherwise picks options[c][k-1]
    std::vector<std::size_t> choice(comps.size(), 0);
    std::vector<std::size_t> v(from.size(), undefined);
    while (true) {
      std::fill(v.begin(), v.end(), undefined);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        if (choice[c] != 0) {
          auto const& m = options[c][choice[c] - 1];
          for (std::size_t k = 0; k < members[c].size(); ++k) {
            v[members[c][k]] = m[k];
          }
        }
      }
      out.push_back(canonical_unchecked(from_values_trusted(from, to, v)));

      std::size_t pos = comps.size();
      bool        done = true;
      while (pos > 0) {
        --pos;
        if (++choice[pos] <= options[pos].size()) {
          done = false;
          break;
        }
        choice[pos] = 0;
      }
      if (done) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<StableMorphism> enumerate_stable_naive(Preorder const& from,
                                                     Preorder const& to) {
    std::vector<StableMorphism> out;
    for (auto const& p : enumerate_partial(from, to)) {
      out.push_back(canonicalize(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t StableHoms::KeyHash::operator()(
      std::pair<Preorder, Preorder> const& k) const noexcept {
    return mix(hash_value(k.first.rel()), hash_value(k.second.rel()));
  }

  std::vector<StableMorphism> const&
  StableHoms::operator()(Preorder const& from, Preorder const& to) {
    auto key = std::make_pair(from, to);
    auto it  = _cache.find(key);
    if (it == _cache.end()) {
      it = _cache.emplace(std::move(key), enumerate_stable(from, to)).first;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal properties
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::string> kernel_failure(StableMorphism const&     k,
                                            StableMorphism const&     f,
                                            std::span<Preorder const> probes,
                                            StableHoms&               homs) {
    if (k.cod() != f.dom()) {
      throw composition_error("kernel check: " + to_string(k)
                              + " does not compose with " + to_string(f));
    }
    if (!is_zero(stab_compose(f, k))) {
      return "composite " + to_string(stab_compose(f, k)) + " is not zero";
    }
    for (auto const& p : probes) {
      std::unordered_map<StableMorphism, std::size_t, StableHash> counts;
      for (auto const& t : homs(p, k.dom())) {
        ++counts[stab_compose(k, t)];
      }
      for (auto const& m : homs(p, f.dom())) {
        if (!is_zero(stab_compose(f, m))) {
          continue;
        }
        auto const it = counts.find(m);
        auto const n  = it == counts.end() ? 0 : it->second;
        if (n != 1) {
          return "probe " + to_string(p) + ": " + to_string(m) + " factors "
                 + std::to_string(n) + " times through the kernel";
        }
      }
    }
    return std::nullopt;
  }

  bool is_kernel(StableMorphism const&     k,
                 StableMorphism const&     f,
                 std::span<Preorder const> probes) {
    StableHoms homs;
    return !kernel_failure(k, f, probes, homs).has_value();
  }

  std::optional<std::string> cokernel_failure(StableMorphism const&     q,
                                              StableMorphism const&     f,
                                              std::span<Preorder const> probes,
                                              StableHoms&               homs) {
    if (f.cod() != q.dom()) {
      throw composition_error("cokernel check: " + to_string(f)
                              + " does not compose with " + to_string(q));
    }
    if (!is_zero(stab_compose(q, f))) {
      return "composite " + to_string(stab_compose(q, f)) + " is not zero";
    }
    for (auto const& p : probes) {
      std::unordered_map<StableMorphism, std::size_t, StableHash> counts;
      for (auto const& t : homs(q.cod(), p)) {
        ++counts[stab_compose(t, q)];
      }
      for (auto const& m : homs(q.dom(), p)) {
        if (!is_zero(stab_compose(m, f))) {
          continue;
        }
        auto const it = counts.find(m);
        auto const n  = it == counts.end() ? 0 : it->second;
        if (n != 1) {
          return "probe " + to_string(p) + ": " + to_string(m) + " factors "
                 + std::to_string(n) + " times through the cokernel";
        }
      }
    }
    return std::nullopt;
  }

  bool is_cokernel(StableMorphism const&     q,
                   StableMorphism const&     f,
                   std::span<Preorder const> probes) {
    StableHoms homs;
    return !cokernel_failure(q, f, probes, homs).has_value();
  }

  std::optional<std::string> exactness_failure(ZExactSequence const&     seq,
                                               std::span<Preorder const> probes,
                                               StableHoms&               homs) {
    auto const k = sigma(seq.kernel_part);
    auto const q = sigma(seq.quotient_part);
    if (auto why = kernel_failure(k, q, probes, homs)) {
      return "kernel side: " + *why;
    }
    if (auto why = cokernel_failure(q, k, probes, homs)) {
      return "cokernel side: " + *why;
    }
    return std::nullopt;
  }

  bool check_exact(ZExactSequence const& seq, std::span<Preorder const> probes) {
    StableHoms homs;
    return !exactness_failure(seq, probes, homs).has_value();
  }

  std::optional<std::string> mono_failure(StableMorphism const&     s,
                                          std::span<Preorder const> probes,
                                          StableHoms&               homs) {
    for (auto const& p : probes) {
      std::unordered_map<StableMorphism, StableMorphism, StableHash> seen;
      for (auto const& m : homs(p, s.dom())) {
        auto image          = stab_compose(s, m);
        auto [it, inserted] = seen.emplace(std::move(image), m);
        if (!inserted) {
          return "probe " + to_string(p) + ": " + to_string(it->second)
                 + " and " + to_string(m) + " have the same composite";
        }
      }
    }
    return std::nullopt;
  }

  bool is_mono_in_stab(StableMorphism const&     s,
                       std::span<Preorder const> probes) {
    StableHoms homs;
    return !mono_failure(s, probes, homs).has_value();
  }

  std::optional<std::string> coproduct_failure(Coproduct const&          c,
                                               std::span<Preorder const> probes,
                                               StableHoms&               homs) {
    auto const ia = sigma(c.left);
    auto const ib = sigma(c.right);
    for (auto const& p : probes) {
      auto const& hs       = homs(c.object, p);
      auto const  expected = homs(c.left.dom(), p).size()
                            * homs(c.right.dom(), p).size();
      if (hs.size() != expected) {
        return "probe " + to_string(p) + ": " + std::to_string(hs.size())
               + " maps out of the sum, " + std::to_string(expected)
               + " pairs out of the summands";
      }
      std::unordered_set<std::pair<StableMorphism, StableMorphism>,
                         StablePairHash>
          seen;
      for (auto const& h : hs) {
        if (!seen.emplace(stab_compose(h, ia), stab_compose(h, ib)).second) {
          return "probe " + to_string(p) + ": " + to_string(h)
                 + " is not determined by its restrictions";
        }
      }
    }
    return std::nullopt;
  }

}  // namespace prestab

#include "prestab/preord.hpp"

#include <map>
#include <set>
#include <sstream>

namespace prestab {

  namespace {
    std::shared_ptr<Preorder> const& empty_preorder() {
      static auto const e = std::make_shared<Preorder>(Carrier(0), Rel(0));
      return e;
    }

    std::string map_string(FinMap const& f) {
      std::string out = "[";
      for (std::size_t i = 0; i < f.dom_size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(f[i]);
      }
      return out + "]";
    }

    std::string describe(Morphism const& f) {
      return to_string(f.dom()) + " -" + map_string(f.map()) + "-> "
             + to_string(f.cod());
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Preorder
  ////////////////////////////////////////////////////////////////////////

  Preorder::Preorder() : _data(empty_preorder()->_data) {}

  Preorder::Preorder(Carrier carrier, Rel rel) {
    if (rel.size() != carrier.size()) {
      throw dimension_error("preorder: relation of size "
                            + std::to_string(rel.size())
                            + " on a carrier of size "
                            + std::to_string(carrier.size()));
    }
    if (!is_reflexive(rel)) {
      throw validation_error("preorder: relation is not reflexive");
    }
    if (!is_transitive(rel)) {
      throw validation_error("preorder: relation is not transitive");
    }
    *this = Preorder(trusted_t{}, std::move(carrier), std::move(rel));
  }

  Preorder::Preorder(Rel rel) {
    Carrier carrier(rel.size());
    *this = Preorder(std::move(carrier), std::move(rel));
  }

  Preorder::Preorder(trusted_t, Carrier carrier, Rel rel) {
    auto        d    = std::make_shared<Data>();
    std::size_t n    = carrier.size();
    d->carrier       = std::move(carrier);
    d->rel           = std::move(rel);
    auto const cls   = quotient_map(equivalence_closure(d->rel));
    d->component_index.assign(cls.targets().begin(), cls.targets().end());
    d->components.assign(cls.cod_size(), Subset(n));
    for (std::size_t i = 0; i < n; ++i) {
      d->components[cls[i]].insert(i);
    }
    _data = std::move(d);
  }

  Preorder Preorder::from_pairs(
      std::size_t                                          n,
      std::span<std::pair<std::size_t, std::size_t> const> pairs,
      bool                                                 close) {
    Rel r = rel_union(Rel::from_pairs(n, pairs), delta(n));
    if (close) {
      r = transitive_closure(r);
    }
    return Preorder(std::move(r));
  }

  Preorder Preorder::from_pairs(
      std::size_t                                                n,
      std::initializer_list<std::pair<std::size_t, std::size_t>> pairs,
      bool                                                       close) {
    return from_pairs(n,
                      std::span<std::pair<std::size_t, std::size_t> const>(
                          pairs.begin(), pairs.size()),
                      close);
  }

  Preorder Preorder::discrete(std::size_t n) {
    return Preorder(trusted_t{}, Carrier(n), delta(n));
  }

  Preorder Preorder::indiscrete(std::size_t n) {
    return Preorder(trusted_t{}, Carrier(n), full_rel(n));
  }

  Preorder Preorder::chain(std::size_t n) {
    Rel r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        r.set(i, j);
      }
    }
    return Preorder(trusted_t{}, Carrier(n), std::move(r));
  }

  bool Preorder::operator==(Preorder const& that) const {
    return _data == that._data
           || (_data->carrier == that._data->carrier
               && _data->rel == that._data->rel);
  }

  std::string to_string(Preorder const& a) {
    std::ostringstream out;
    out << "(" << a.size() << ";";
    bool first = true;
    for (auto [i, j] : a.rel().pairs()) {
      if (i != j) {
        out << (first ? " " : ", ") << a.carrier().label(i) << "->"
            << a.carrier().label(j);
        first = false;
      }
    }
    out << ")";
    return out.str();
  }

  Preorder restrict(Preorder const& a, Subset const& b) {
    Rel r = restrict_rel(a.rel(), b);
    if (a.carrier().has_labels()) {
      std::vector<std::string> labels;
      for (auto i : b.members()) {
        labels.push_back((*a.carrier().labels())[i]);
      }
      auto const k = labels.size();
      return Preorder(Preorder::trusted_t{}, Carrier(k, std::move(labels)),
                      std::move(r));
    }
    std::size_t const n = r.size();
    return Preorder(Preorder::trusted_t{}, Carrier(n), std::move(r));
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism
  ////////////////////////////////////////////////////////////////////////

  bool is_monotone(Preorder const& dom, Preorder const& cod, FinMap const& map) {
    for (std::size_t a = 0; a < dom.size(); ++a) {
      for (std::size_t b = 0; b < dom.size(); ++b) {
        if (dom.leq(a, b) && !cod.leq(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  Morphism::Morphism(Preorder dom, Preorder cod, FinMap map)
      : _dom(std::move(dom)), _cod(std::move(cod)), _map(std::move(map)) {
    if (_map.dom_size() != _dom.size() || _map.cod_size() != _cod.size()) {
      throw dimension_error("morphism: map " + std::to_string(_map.dom_size())
                            + " -> " + std::to_string(_map.cod_size())
                            + " between preorders of sizes "
                            + std::to_string(_dom.size()) + " and "
                            + std::to_string(_cod.size()));
    }
    if (!is_monotone(_dom, _cod, _map)) {
      throw validation_error("morphism: map " + map_string(_map)
                             + " is not monotone");
    }
  }

  Morphism Morphism::identity(Preorder const& a) {
    return Morphism(trusted_t{}, a, a, FinMap::identity(a.size()));
  }

  Morphism unchecked_morphism(Preorder dom, Preorder cod, FinMap map) {
    return Morphism(Morphism::trusted_t{},
                    std::move(dom),
                    std::move(cod),
                    std::move(map));
  }

  Morphism compose(Morphism const& g, Morphism const& f) {
    if (!(f.cod() == g.dom())) {
      throw composition_error("compose: codomain " + to_string(f.cod())
                              + " is not the domain " + to_string(g.dom()));
    }
    return Morphism(
        Morphism::trusted_t{}, f.dom(), g.cod(), compose(g.map(), f.map()));
  }

  Morphism inclusion(Preorder const& a, Subset const& b) {
    return unchecked_morphism(restrict(a, b), a, inclusion_map(b));
  }

  Morphism restrict(Morphism const& f, Subset const& b) {
    return unchecked_morphism(
        restrict(f.dom(), b), f.cod(), restrict_map(f.map(), b));
  }

  void for_each_monotone(Preorder const&                            dom,
                         Preorder const&                            cod,
                         std::function<void(Morphism const&)> const& fn) {
    std::size_t const n = dom.size();
    std::size_t const m = cod.size();
    if (n > 0 && m == 0) {
      return;
    }
    std::vector<std::size_t> t(n, 0);
    while (true) {
      FinMap map(n, m, t);
      if (is_monotone(dom, cod, map)) {
        fn(unchecked_morphism(dom, cod, std::move(map)));
      }
      // odometer, last position fastest
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++t[pos] < m) {
          break;
        }
        t[pos] = 0;
        if (pos == 0) {
          return;
        }
      }
      if (n == 0) {
        return;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Trivial morphisms, Z-kernels, Z-cokernels
  ////////////////////////////////////////////////////////////////////////

  bool is_trivial(Morphism const& f) {
    auto const& rho = f.dom().rel();
    for (std::size_t a = 0; a < rho.size(); ++a) {
      for (std::size_t b = 0; b < rho.size(); ++b) {
        if (rho.test(a, b) && f[a] != f[b]) {
          return false;
        }
      }
    }
    return true;
  }

  Morphism z_kernel(Morphism const& f) {
    auto const& a = f.dom();
    Preorder    k(a.carrier(), rel_intersection(kernel_pair(f.map()), a.rel()));
    return unchecked_morphism(std::move(k), a, FinMap::identity(a.size()));
  }

  ZCokernelTrace z_cokernel_trace(Morphism const& f, ClosureFn closure) {
    auto const& b     = f.cod();
    Rel const   f_rho = image_rel(f.map(), f.dom().rel());
    Rel         w     = equivalence_closure(f_rho);
    FinMap      q     = quotient_map(w);
    Rel         u     = rel_union(b.rel(), opposite(f_rho));
    Rel         u_bar = closure(u);
    Preorder    quotient(image_rel(q, u_bar));
    return {std::move(w), std::move(u), std::move(u_bar),
            unchecked_morphism(b, std::move(quotient), std::move(q))};
  }

  Morphism z_cokernel(Morphism const& f, ClosureFn closure) {
    return z_cokernel_trace(f, closure).q;
  }

  std::optional<std::string>
  z_universal_failure(Morphism const&           candidate,
                      Morphism const&           f,
                      UniversalSide             side,
                      std::span<Preorder const> probes) {
    if (side == UniversalSide::kernel) {
      // candidate k : K -> A, f : A -> B
      Morphism const& k = candidate;
      Morphism const  fk = compose(f, k);
      if (!is_trivial(fk)) {
        return "composite " + describe(fk) + " is not trivial";
      }
      for (auto const& p : probes) {
        std::map<FinMap, std::size_t> factorizations;
        for_each_monotone(p, k.dom(), [&](Morphism const& u) {
          ++factorizations[compose(k.map(), u.map())];
        });
        std::optional<std::string> failure;
        for_each_monotone(p, k.cod(), [&](Morphism const& lambda) {
          if (failure || !is_trivial(compose(f, lambda))) {
            return;
          }
          auto it = factorizations.find(lambda.map());
          std::size_t count = it == factorizations.end() ? 0 : it->second;
          if (count != 1) {
            failure = describe(lambda) + " has " + std::to_string(count)
                      + " factorizations through the kernel";
          }
        });
        if (failure) {
          return failure;
        }
      }
      return std::nullopt;
    }
    // candidate q : B -> Q, f : A -> B
    Morphism const& q  = candidate;
    Morphism const  qf = compose(q, f);
    if (!is_trivial(qf)) {
      return "composite " + describe(qf) + " is not trivial";
    }
    for (auto const& p : probes) {
      std::map<FinMap, std::size_t> factorizations;
      for_each_monotone(q.cod(), p, [&](Morphism const& u) {
        ++factorizations[compose(u.map(), q.map())];
      });
      std::optional<std::string> failure;
      for_each_monotone(q.dom(), p, [&](Morphism const& pm) {
        if (failure || !is_trivial(compose(pm, f))) {
          return;
        }
        auto it = factorizations.find(pm.map());
        std::size_t count = it == factorizations.end() ? 0 : it->second;
        if (count != 1) {
          failure = describe(pm) + " has " + std::to_string(count)
                    + " factorizations through the cokernel";
        }
      });
      if (failure) {
        return failure;
      }
    }
    return std::nullopt;
  }

  bool verify_z_universal(Morphism const&           candidate,
                          Morphism const&           f,
                          UniversalSide             side,
                          std::span<Preorder const> probes) {
    return !z_universal_failure(candidate, f, side, probes).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Coproducts
  ////////////////////////////////////////////////////////////////////////

  Coproduct coproduct(Preorder const& a, Preorder const& b) {
    std::size_t const n = a.size();
    std::size_t const m = b.size();
    Rel               r(n + m);
    for (auto [i, j] : a.rel().pairs()) {
      r.set(i, j);
    }
    for (auto [i, j] : b.rel().pairs()) {
      r.set(n + i, n + j);
    }
    Carrier carrier(n + m);
    if (a.carrier().has_labels() && b.carrier().has_labels()) {
      std::vector<std::string> labels = *a.carrier().labels();
      labels.insert(labels.end(),
                    b.carrier().labels()->begin(),
                    b.carrier().labels()->end());
      if (std::set<std::string>(labels.begin(), labels.end()).size()
          == labels.size()) {
        carrier = Carrier(n + m, std::move(labels));
      }
    }
    Preorder                 sum(std::move(carrier), std::move(r));
    std::vector<std::size_t> left(n);
    std::vector<std::size_t> right(m);
    for (std::size_t i = 0; i < n; ++i) {
      left[i] = i;
    }
    for (std::size_t j = 0; j < m; ++j) {
      right[j] = n + j;
    }
    return Coproduct{
        sum,
        unchecked_morphism(a, sum, FinMap(n, n + m, std::move(left))),
        unchecked_morphism(b, sum, FinMap(m, n + m, std::move(right)))};
  }

  Morphism copair(Coproduct const& c, Morphism const& f, Morphism const& g) {
    if (!(f.dom() == c.left.dom()) || !(g.dom() == c.right.dom())
        || !(f.cod() == g.cod())) {
      throw composition_error(
          "copair: maps do not match the coproduct summands");
    }
    std::vector<std::size_t> t;
    t.reserve(c.object.size());
    t.insert(t.end(), f.map().targets().begin(), f.map().targets().end());
    t.insert(t.end(), g.map().targets().begin(), g.map().targets().end());
    return unchecked_morphism(
        c.object, f.cod(), FinMap(c.object.size(), f.cod().size(), std::move(t)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Open and clopen subsets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_subset_of(Preorder const& a, Subset const& b) {
      if (b.size() != a.size()) {
        throw dimension_error("subset of a carrier of size "
                              + std::to_string(b.size())
                              + " used with a preorder of size "
                              + std::to_string(a.size()));
      }
    }

    // Some pair of rho leads from `from` into `to`.
    bool crosses(Preorder const& a, Subset const& from, Subset const& to) {
      for (auto i : from.members()) {
        for (auto j : to.members()) {
          if (a.leq(i, j)) {
            return true;
          }
        }
      }
      return false;
    }
  }  // namespace

  bool is_open(Preorder const& a, Subset const& b) {
    require_subset_of(a, b);
    return !crosses(a, b.complement(), b);
  }

  bool is_clopen(Preorder const& a, Subset const& b) {
    require_subset_of(a, b);
    auto const c = b.complement();
    return !crosses(a, c, b) && !crosses(a, b, c);
  }

  ClopenPartition clopen_components(Preorder const& a) {
    return ClopenPartition{
        a, std::vector<Subset>(a.components().begin(), a.components().end())};
  }

  std::vector<Subset> enumerate_clopens(Preorder const& a, std::size_t cap) {
    auto const blocks = a.components();
    if (blocks.size() > cap) {
      throw resource_error("enumerate_clopens: " + std::to_string(blocks.size())
                           + " components exceed the cap of "
                           + std::to_string(cap)
                           + "; iterate over the components instead");
    }
    std::vector<Subset> out;
    std::size_t const   total = std::size_t{1} << blocks.size();
    out.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
      Subset s(a.size());
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        if ((mask >> k) & 1U) {
          s |= blocks[k];
        }
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  bool square_is_pullback(Preorder const& a, Subset const& b, Square square) {
    require_subset_of(a, b);
    Subset const side = (square == Square::I || square == Square::III)
                            ? b
                            : b.complement();
    bool const first = square == Square::I || square == Square::II;
    // The square is a pullback iff every pair of rho whose chosen projection
    // lands in `side` lies entirely in `side`.
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (!a.leq(i, j)) {
          continue;
        }
        std::size_t const anchored = first ? i : j;
        std::size_t const other    = first ? j : i;
        if (side.contains(anchored) && !side.contains(other)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_fibration_pair(Preorder const& a, Subset const& b) {
    return square_is_pullback(a, b, Square::I)
           && square_is_pullback(a, b, Square::III);
  }

  ////////////////////////////////////////////////////////////////////////
  // The pretorsion theory
  ////////////////////////////////////////////////////////////////////////

  Rel symmetrization(Preorder const& a) {
    return rel_intersection(a.rel(), opposite(a.rel()));
  }

  ZExactSequence torsion_sequence(Preorder const& a) {
    Rel      sim = symmetrization(a);
    FinMap   q   = quotient_map(sim);
    Preorder kernel_object(a.carrier(), std::move(sim));
    Preorder quotient_object(image_rel(q, a.rel()));
    return ZExactSequence{
        unchecked_morphism(
            std::move(kernel_object), a, FinMap::identity(a.size())),
        Morphism(a, std::move(quotient_object), std::move(q))};
  }

  std::optional<std::string> z_exact_failure(ZExactSequence const&     seq,
                                             std::span<Preorder const> probes) {
    if (!(seq.kernel_part.cod() == seq.quotient_part.dom())) {
      return std::string("kernel part and quotient part are not composable");
    }
    if (auto f = z_universal_failure(
            seq.kernel_part, seq.quotient_part, UniversalSide::kernel, probes)) {
      return "not a Z-kernel: " + *f;
    }
    if (auto f = z_universal_failure(seq.quotient_part,
                                     seq.kernel_part,
                                     UniversalSide::cokernel,
                                     probes)) {
      return "not a Z-cokernel: " + *f;
    }
    return std::nullopt;
  }

  Classification classify(Preorder const& a) {
    bool const eq = is_symmetric(a.rel());
    bool const po = is_antisymmetric(a.rel());
    return Classification{eq, po, eq && po};
  }

  Preorder from_endofunction(FinMap const& f) {
    if (f.dom_size() != f.cod_size()) {
      throw dimension_error("from_endofunction: map is not an endofunction");
    }
    std::size_t const n = f.dom_size();
    Rel               r(n);
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<bool> seen(n, false);
      for (std::size_t x = y; !seen[x]; x = f[x]) {
        seen[x] = true;
        r.set(x, y);
      }
    }
    return Preorder(std::move(r));
  }

}  // namespace prestab

#ifndef PRESTAB_STAB_HPP_
#define PRESTAB_STAB_HPP_

// Partial morphisms defined on clopen subsets, the congruence that identifies
// partial morphisms agreeing on a common clopen part and trivial elsewhere,
// and the resulting stable category with its quotient functor sigma.
//
// A stable morphism is stored in canonical form: the domain of definition
// is cut down to the clopen components on which the map is not trivial.
// Over finite sets two partial morphisms are congruent exactly when their
// canonical forms coincide, so equality of stable morphisms is plain value
// equality.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prestab/preord.hpp"

namespace prestab {

  ////////////////////////////////////////////////////////////////////////
  // PartialMorphism
  ////////////////////////////////////////////////////////////////////////

  class PartialMorphism {
   public:
    static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

    // `map` goes from the elements of `domain` (re-indexed in increasing
    // order) to cod. Throws dimension_error on arity mismatch and
    // validation_error unless domain is clopen in dom and map is monotone for
    // the restricted order.
    PartialMorphism(Preorder dom, Preorder cod, Subset domain, FinMap map);

    Preorder const& dom() const noexcept {
      return _dom;
    }
    Preorder const& cod() const noexcept {
      return _cod;
    }
    Subset const& domain() const noexcept {
      return _domain;
    }
    FinMap const& map() const noexcept {
      return _map;
    }

    // One entry per element of dom: its image, or `undefined` outside the
    // domain of definition.
    std::vector<std::size_t> values() const;

    // (A', rho_A') -> cod, the total part.
    Morphism total_part() const;

    bool operator==(PartialMorphism const&) const = default;

   private:
    struct trusted_t {};
    PartialMorphism(trusted_t, Preorder dom, Preorder cod, Subset domain,
                    FinMap map)
        : _dom(std::move(dom)),
          _cod(std::move(cod)),
          _domain(std::move(domain)),
          _map(std::move(map)) {}

    friend PartialMorphism unchecked_partial(Preorder, Preorder, Subset,
                                             FinMap);

    Preorder _dom;
    Preorder _cod;
    Subset   _domain;
    FinMap   _map;
  };

  PartialMorphism unchecked_partial(Preorder dom, Preorder cod, Subset domain,
                                    FinMap map);

  // Builds the partial morphism from a full-length value vector, `undefined`
  // marking elements outside the domain. Validated like the constructor.
  PartialMorphism partial_from_values(Preorder const&               dom,
                                      Preorder const&               cod,
                                      std::span<std::size_t const>  values);

  std::string to_string(PartialMorphism const& p);

  // Total partial morphism with the same map.
  PartialMorphism embed(Morphism const& f);

  // g after f: defined where f is defined and lands in the domain of g.
  // Throws composition_error unless f.cod() == g.dom().
  PartialMorphism compose_partial(PartialMorphism const& g,
                                  PartialMorphism const& f);

  // Whether p restricted to `part` (a subset of its domain) is trivial.
  bool is_trivial_on(PartialMorphism const& p, Subset const& part);

  ////////////////////////////////////////////////////////////////////////
  // The congruence
  ////////////////////////////////////////////////////////////////////////

  struct CongruenceWitness {
    // Clopen, inside both domains, where the two maps agree.
    Subset a0;
    // The complements of a0 in each domain; each map is trivial on its own.
    std::pair<Subset, Subset> complements;

    bool operator==(CongruenceWitness const&) const = default;
  };

  struct CongruenceResult {
    std::optional<CongruenceWitness> witness;
    // When not congruent: index (in dom().components()) of a component
    // where the maps cannot be reconciled.
    std::optional<std::size_t> offending_component;
  };

  // Decided one clopen component at a time. Throws composition_error unless
  // both have the same dom and cod.
  CongruenceResult congruence(PartialMorphism const& p1,
                              PartialMorphism const& p2);

  std::optional<CongruenceWitness> congruent(PartialMorphism const& p1,
                                             PartialMorphism const& p2);

  // The same question answered from the definition: search every subset of
  // the common domain that is clopen, and test the agreement and triviality
  // clauses directly. Exponential; for cross-checking.
  std::optional<CongruenceWitness> congruent_by_search(PartialMorphism const& p1,
                                                       PartialMorphism const& p2);

  ////////////////////////////////////////////////////////////////////////
  // StableMorphism
  ////////////////////////////////////////////////////////////////////////

  class StableMorphism {
   public:
    PartialMorphism const& underlying() const noexcept {
      return _p;
    }
    Preorder const& dom() const noexcept {
      return _p.dom();
    }
    Preorder const& cod() const noexcept {
      return _p.cod();
    }

    bool operator==(StableMorphism const&) const = default;

   private:
    explicit StableMorphism(PartialMorphism p) : _p(std::move(p)) {}

    friend StableMorphism canonicalize(PartialMorphism const&);
    friend StableMorphism canonical_unchecked(PartialMorphism);

    PartialMorphism _p;
  };

  // Orders stable morphisms with the same dom and cod by domain, then map.
  bool operator<(StableMorphism const& a, StableMorphism const& b);

  std::size_t hash_value(StableMorphism const& s) noexcept;

  std::string to_string(StableMorphism const& s);

  // Drops every clopen component on which p is trivial.
  StableMorphism canonicalize(PartialMorphism const& p);

  StableMorphism sigma(Morphism const& f);
  StableMorphism stab_identity(Preorder const& a);
  StableMorphism stab_compose(StableMorphism const& g, StableMorphism const& f);
  StableMorphism zero_morphism(Preorder const& a, Preorder const& b);
  bool           is_zero(StableMorphism const& s);

  // f and g agree on some clopen B and are both trivial on its complement.
  // Throws composition_error unless they are parallel.
  bool ff_related(Morphism const& f, Morphism const& g);

  // sigma of the Z-cokernel of the total part of s.
  StableMorphism stab_cokernel(StableMorphism const& s,
                               ClosureFn closure = &transitive_closure);

  ////////////////////////////////////////////////////////////////////////
  // Hom-set enumeration
  ////////////////////////////////////////////////////////////////////////

  // Every partial morphism from -> to: each clopen subset, each monotone map
  // on it (clopen subsets in component-bitmask order, maps in odometer
  // order).
  std::vector<PartialMorphism> enumerate_partial(Preorder const& from,
                                                 Preorder const& to);

  // The stable hom-set, sorted. Built directly from canonical forms: each
  // component is either left out or given a non-trivial monotone map.
  std::vector<StableMorphism> enumerate_stable(Preorder const& from,
                                               Preorder const& to);

  // The same hom-set obtained by canonicalizing enumerate_partial and
  // removing duplicates.
  std::vector<StableMorphism> enumerate_stable_naive(Preorder const& from,
                                                     Preorder const& to);

  // Memoized enumerate_stable. Not thread-safe.
  class StableHoms {
   public:
    std::vector<StableMorphism> const& operator()(Preorder const& from,
                                                  Preorder const& to);

   private:
    struct KeyHash {
      std::size_t
      operator()(std::pair<Preorder, Preorder> const& k) const noexcept;
    };
    std::unordered_map<std::pair<Preorder, Preorder>,
                       std::vector<StableMorphism>,
                       KeyHash>
        _cache;
  };

  ////////////////////////////////////////////////////////////////////////
  // Universal properties relative to probe objects
  ////////////////////////////////////////////////////////////////////////

  // k : K -> A is a kernel of f : A -> B: f k = 0, and every m : P -> A with
  // f m = 0 factors through k exactly once. Returns the first failure.
  std::optional<std::string> kernel_failure(StableMorphism const&     k,
                                            StableMorphism const&     f,
                                            std::span<Preorder const> probes,
                                            StableHoms&               homs);
  bool is_kernel(StableMorphism const&     k,
                 StableMorphism const&     f,
                 std::span<Preorder const> probes);

  // q : B -> Q is a cokernel of f : A -> B.
  std::optional<std::string> cokernel_failure(StableMorphism const&     q,
                                              StableMorphism const&     f,
                                              std::span<Preorder const> probes,
                                              StableHoms&               homs);
  bool is_cokernel(StableMorphism const&     q,
                   StableMorphism const&     f,
                   std::span<Preorder const> probes);

  // sigma of the kernel part is a kernel of sigma of the quotient part, and
  // sigma of the quotient part is a cokernel of sigma of the kernel part.
  std::optional<std::string> exactness_failure(ZExactSequence const&     seq,
                                               std::span<Preorder const> probes,
                                               StableHoms&               homs);
  bool check_exact(ZExactSequence const& seq, std::span<Preorder const> probes);

  // s is left-cancellable against stable morphisms out of every probe.
  std::optional<std::string> mono_failure(StableMorphism const&     s,
                                          std::span<Preorder const> probes,
                                          StableHoms&               homs);
  bool is_mono_in_stab(StableMorphism const&     s,
                       std::span<Preorder const> probes);

  // sigma of the coprojections is a coproduct cocone in the stable category:
  // pairs of stable maps out of the summands into each probe correspond
  // one-to-one to stable maps out of the sum.
  std::optional<std::string> coproduct_failure(Coproduct const&          c,
                                               std::span<Preorder const> probes,
                                               StableHoms&               homs);

}  // namespace prestab

#endif  // PRESTAB_STAB_HPP_

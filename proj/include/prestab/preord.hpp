#ifndef PRESTAB_PREORD_HPP_
#define PRESTAB_PREORD_HPP_

// Preorders on finite sets and monotone maps between them, together with the
// (equivalence relation, partial order) pretorsion theory: trivial
// morphisms, Z-kernels, Z-cokernels, coproducts and clopen subsets.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prestab/relcore.hpp"

namespace prestab {

  ////////////////////////////////////////////////////////////////////////
  // Preorder
  ////////////////////////////////////////////////////////////////////////

  // A finite carrier with a reflexive transitive relation. Copies share the
  // immutable representation, including the cached clopen components.
  class Preorder {
   public:
    // The empty preorder (the initial object).
    Preorder();
    // Throws validation_error unless rel is reflexive and transitive, and
    // dimension_error unless rel.size() == carrier.size().
    Preorder(Carrier carrier, Rel rel);
    explicit Preorder(Rel rel);

    // Delta plus the listed pairs. With close = true the reflexive
    // transitive closure is taken; otherwise non-transitive input is
    // rejected.
    static Preorder
    from_pairs(std::size_t                                          n,
               std::span<std::pair<std::size_t, std::size_t> const> pairs,
               bool close = false);
    static Preorder
    from_pairs(std::size_t                                                n,
               std::initializer_list<std::pair<std::size_t, std::size_t>> pairs,
               bool close = false);
    static Preorder discrete(std::size_t n);
    static Preorder indiscrete(std::size_t n);
    // 0 <= 1 <= ... <= n-1
    static Preorder chain(std::size_t n);

    std::size_t size() const noexcept {
      return _data->carrier.size();
    }
    Carrier const& carrier() const noexcept {
      return _data->carrier;
    }
    Rel const& rel() const noexcept {
      return _data->rel;
    }
    bool leq(std::size_t i, std::size_t j) const noexcept {
      return _data->rel.test(i, j);
    }

    // Connected components of the underlying undirected graph, ordered by
    // least member: the finest partition into clopen subsets.
    std::span<Subset const> components() const noexcept {
      return _data->components;
    }
    std::size_t component_of(std::size_t i) const noexcept {
      return _data->component_index[i];
    }

    // Same carrier (including labels) and same relation.
    bool operator==(Preorder const& that) const;

    // Identity of the shared representation; equal handles are equal
    // preorders, but not conversely.
    void const* handle() const noexcept {
      return _data.get();
    }

   private:
    struct Data {
      Carrier                  carrier;
      Rel                      rel;
      std::vector<Subset>      components;
      std::vector<std::size_t> component_index;
    };

    struct trusted_t {};
    Preorder(trusted_t, Carrier carrier, Rel rel);

    friend Preorder restrict(Preorder const&, Subset const&);

    std::shared_ptr<Data const> _data;
  };

  // The readable form "(n; i->j, ...)" listing pairs of the relation outside
  // the diagonal.
  std::string to_string(Preorder const& a);

  // (B, rho_B): the restriction of a to b, re-indexed by increasing original
  // index. Labels of members are kept.
  Preorder restrict(Preorder const& a, Subset const& b);

  ////////////////////////////////////////////////////////////////////////
  // Morphism
  ////////////////////////////////////////////////////////////////////////

  bool is_monotone(Preorder const& dom, Preorder const& cod, FinMap const& map);

  // A monotone map between preorders.
  class Morphism {
   public:
    // Throws dimension_error on arity mismatch and validation_error when the
    // map is not monotone.
    Morphism(Preorder dom, Preorder cod, FinMap map);

    static Morphism identity(Preorder const& a);

    Preorder const& dom() const noexcept {
      return _dom;
    }
    Preorder const& cod() const noexcept {
      return _cod;
    }
    FinMap const& map() const noexcept {
      return _map;
    }
    std::size_t operator[](std::size_t i) const noexcept {
      return _map[i];
    }

    bool operator==(Morphism const&) const = default;

   private:
    struct trusted_t {};
    Morphism(trusted_t, Preorder dom, Preorder cod, FinMap map)
        : _dom(std::move(dom)), _cod(std::move(cod)), _map(std::move(map)) {}

    friend Morphism compose(Morphism const&, Morphism const&);
    friend Morphism unchecked_morphism(Preorder, Preorder, FinMap);

    Preorder _dom;
    Preorder _cod;
    FinMap   _map;
  };

  // Skips the monotonicity check; for callers that have already established
  // it.
  Morphism unchecked_morphism(Preorder dom, Preorder cod, FinMap map);

  // g after f. Throws composition_error unless f.cod() == g.dom().
  Morphism compose(Morphism const& g, Morphism const& f);

  // The inclusion (B, rho_B) -> (A, rho).
  Morphism inclusion(Preorder const& a, Subset const& b);
  // f restricted to (B, rho_B).
  Morphism restrict(Morphism const& f, Subset const& b);

  // Visits every monotone map dom -> cod, enumerating all raw maps in
  // odometer order (last element fastest) and skipping non-monotone ones.
  void for_each_monotone(Preorder const&                            dom,
                         Preorder const&                            cod,
                         std::function<void(Morphism const&)> const& fn);

  ////////////////////////////////////////////////////////////////////////
  // Trivial morphisms, Z-kernels, Z-cokernels
  ////////////////////////////////////////////////////////////////////////

  // f factors through a discrete object: dom.rel() is contained in Eq(f).
  bool is_trivial(Morphism const& f);

  // The inclusion (A, Eq(f) n rho) -> (A, rho).
  Morphism z_kernel(Morphism const& f);

  // The closure used for the order of a Z-cokernel. Replaceable so that the
  // verification suites can be shown to detect a wrong closure.
  using ClosureFn = Rel (*)(Rel const&);

  // The Z-cokernel q : (B, sigma) -> (Q, tau) of f : (A, rho) -> (B, sigma):
  // q is the quotient by the equivalence relation generated by f(rho)
  // (classes numbered by least member) and tau = q(closure(sigma u f(rho)°)).
  Morphism z_cokernel(Morphism const& f,
                      ClosureFn       closure = &transitive_closure);

  // The intermediate relations of the construction above, on B.
  struct ZCokernelTrace {
    Rel      equivalence;  // W, generated by f(rho)
    Rel      u;            // sigma u f(rho)°
    Rel      u_closure;    // closure(u)
    Morphism q;
  };

  ZCokernelTrace z_cokernel_trace(Morphism const& f,
                                  ClosureFn       closure = &transitive_closure);

  enum class UniversalSide { kernel, cokernel };

  // Brute-force check that `candidate` is a Z-kernel (resp. Z-cokernel) of f
  // relative to the probe objects. Returns a description of the first
  // failure, or nullopt. Throws composition_error if candidate and f are not
  // composable on the stated side.
  std::optional<std::string>
  z_universal_failure(Morphism const&           candidate,
                      Morphism const&           f,
                      UniversalSide             side,
                      std::span<Preorder const> probes);

  bool verify_z_universal(Morphism const&           candidate,
                          Morphism const&           f,
                          UniversalSide             side,
                          std::span<Preorder const> probes);

  ////////////////////////////////////////////////////////////////////////
  // Coproducts
  ////////////////////////////////////////////////////////////////////////

  struct Coproduct {
    Preorder object;
    Morphism left;
    Morphism right;
  };

  // Disjoint union with the left summand first and the block-diagonal
  // relation. Labels are kept when both summands are labeled and the union
  // of labels stays distinct.
  Coproduct coproduct(Preorder const& a, Preorder const& b);

  // The unique map out of the coproduct agreeing with f on the left summand
  // and g on the right. Throws composition_error on mismatched objects.
  Morphism copair(Coproduct const& c, Morphism const& f, Morphism const& g);

  ////////////////////////////////////////////////////////////////////////
  // Open and clopen subsets
  ////////////////////////////////////////////////////////////////////////

  // No pair of rho goes from the complement of b into b.
  bool is_open(Preorder const& a, Subset const& b);
  // b and its complement are both open.
  bool is_clopen(Preorder const& a, Subset const& b);

  struct ClopenPartition {
    Preorder            base;
    std::vector<Subset> blocks;
  };

  ClopenPartition clopen_components(Preorder const& a);

  inline constexpr std::size_t default_clopen_cap = 20;

  // Every union of clopen components, indexed by the bitmask over the
  // components. Throws resource_error when there are more than `cap`
  // components; iterate over components() directly in that case.
  std::vector<Subset> enumerate_clopens(Preorder const& a,
                                        std::size_t     cap = default_clopen_cap);

  // The four pullback squares comparing the inclusions of b and its
  // complement with the projections of rho. I and III concern b with the
  // first and second projection, II and IV its complement.
  enum class Square { I, II, III, IV };

  bool square_is_pullback(Preorder const& a, Subset const& b, Square square);

  // The inclusion of b is a discrete fibration and a discrete opfibration
  // (squares I and III are pullbacks).
  bool is_fibration_pair(Preorder const& a, Subset const& b);

  ////////////////////////////////////////////////////////////////////////
  // The pretorsion theory
  ////////////////////////////////////////////////////////////////////////

  // rho n rho°.
  Rel symmetrization(Preorder const& a);

  struct ZExactSequence {
    Morphism kernel_part;
    Morphism quotient_part;
  };

  // (A, ~rho) -> (A, rho) -> (A/~rho, pi(rho)).
  ZExactSequence torsion_sequence(Preorder const& a);

  // The sequence invariants relative to the probes: composable, the first
  // part a Z-kernel of the second and the second a Z-cokernel of the first.
  // Returns the first failure found.
  std::optional<std::string> z_exact_failure(ZExactSequence const&     seq,
                                             std::span<Preorder const> probes);

  struct Classification {
    bool is_equivalence_object;
    bool is_partial_order_object;
    bool is_discrete;

    bool operator==(Classification const&) const = default;
  };

  Classification classify(Preorder const& a);

  // x <= y iff x = f^t(y) for some t >= 0. Throws dimension_error unless f
  // is an endofunction.
  Preorder from_endofunction(FinMap const& f);

}  // namespace prestab

#endif  // PRESTAB_PREORD_HPP_

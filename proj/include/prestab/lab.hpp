#ifndef PRESTAB_LAB_HPP_
#define PRESTAB_LAB_HPP_

// Exhaustive enumeration of small preorders and the named verification
// suites that check the theory on them.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prestab/preord.hpp"
#include "prestab/stab.hpp"

namespace prestab {

  // Largest carrier for which enumerate_preorders runs (2^(n(n-1)) masks).
  inline constexpr std::size_t max_enumerable_size = 4;

  // All preorders on {0, ..., n-1}: every subset of off-diagonal positions
  // (bit k is the k-th position in lexicographic order) with the diagonal
  // added, kept when transitive. Throws resource_error for n > 4.
  std::vector<Preorder> enumerate_preorders(std::size_t n);

  // Sizes 0 through max_size, smaller sizes first.
  std::vector<Preorder> enumerate_preorders_upto(std::size_t max_size);

  // All monotone maps a -> b in odometer order.
  std::vector<Morphism> enumerate_morphisms(Preorder const& a,
                                            Preorder const& b);

  // Every preorder of size <= max_size, with monotone maps between any two
  // members generated on first use.
  class InstanceFamily {
   public:
    explicit InstanceFamily(std::size_t max_size);

    std::size_t max_size() const noexcept {
      return _max_size;
    }
    std::span<Preorder const> preorders() const noexcept {
      return _preorders;
    }
    // Members of size <= n, a prefix of preorders().
    std::span<Preorder const> upto(std::size_t n) const noexcept;

    std::vector<Morphism> const& morphisms(std::size_t from, std::size_t to);

   private:
    std::size_t                                       _max_size;
    std::vector<Preorder>                             _preorders;
    std::vector<std::size_t>                          _size_end;
    std::vector<std::optional<std::vector<Morphism>>> _morphisms;
  };

  struct SuiteReport {
    std::string suite;
    std::size_t max_size = 0;
    // Exhaustively enumerated instances.
    std::size_t instances = 0;
    // Additional seeded random instances.
    std::size_t random_instances = 0;
    // Total failures; `failures` keeps the first ones in instance order.
    std::size_t              failure_count = 0;
    std::vector<std::string> failures;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const noexcept {
      return failure_count == 0;
    }
  };

  struct SuiteOptions {
    // Closure used for the order of Z-cokernels inside the suites.
    ClosureFn cokernel_closure = &transitive_closure;
    // Randomized trials one size above max_size, where a suite has them.
    std::size_t   random_trials = 10000;
    std::size_t   spot_checks   = 200;
    std::uint64_t seed          = 0x5eed5eed;
    // Probe objects for universal properties have size <= min(max, this).
    std::size_t probe_max_size = 3;
    // Quantifiers over morphisms stop at min(max, this).
    std::size_t morphism_max_size = 3;
    std::size_t max_failures      = 20;
  };

  std::span<std::string_view const> suite_names();

  // Throws usage_error for an unknown suite or max_size == 0, and
  // resource_error for max_size > 4.
  SuiteReport run_suite(std::string_view    name,
                        std::size_t         max_size,
                        SuiteOptions const& options = {});

}  // namespace prestab

#endif  // PRESTAB_LAB_HPP_

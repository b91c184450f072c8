#ifndef PRESTAB_RELCORE_HPP_
#define PRESTAB_RELCORE_HPP_

// Finite relation algebra on an indexed carrier {0, ..., n-1}: boolean square
// relations stored as bit rows, subsets as bitmasks, and total maps between
// carriers. Everything here is a value type; operations are pure functions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prestab/error.hpp"
#include "prestab/relcore/kernels.hpp"

namespace prestab {

  using kernels::word;

  ////////////////////////////////////////////////////////////////////////
  // Carrier
  ////////////////////////////////////////////////////////////////////////

  // A finite set {0, ..., size-1} with optional display labels.
  class Carrier {
   public:
    Carrier() = default;
    explicit Carrier(std::size_t size) : _size(size) {}
    // Throws validation_error unless labels has exactly `size` distinct
    // entries.
    Carrier(std::size_t size, std::vector<std::string> labels);

    std::size_t size() const noexcept {
      return _size;
    }
    bool has_labels() const noexcept {
      return _labels.has_value();
    }
    std::optional<std::vector<std::string>> const& labels() const noexcept {
      return _labels;
    }
    // The label of element i, or its index in decimal when unlabeled.
    std::string label(std::size_t i) const;

    bool operator==(Carrier const&) const = default;

   private:
    std::size_t                             _size = 0;
    std::optional<std::vector<std::string>> _labels;
  };

  ////////////////////////////////////////////////////////////////////////
  // FinMap
  ////////////////////////////////////////////////////////////////////////

  class FinMap {
   public:
    FinMap() = default;
    // Throws dimension_error if targets.size() != dom_size or some target is
    // not below cod_size.
    FinMap(std::size_t dom_size, std::size_t cod_size,
           std::vector<std::size_t> targets);

    static FinMap identity(std::size_t n);
    static FinMap constant(std::size_t dom_size, std::size_t cod_size,
                           std::size_t value);

    std::size_t dom_size() const noexcept {
      return _targets.size();
    }
    std::size_t cod_size() const noexcept {
      return _cod_size;
    }
    std::size_t operator[](std::size_t i) const noexcept {
      return _targets[i];
    }
    std::span<std::size_t const> targets() const noexcept {
      return _targets;
    }

    bool operator==(FinMap const&) const = default;
    auto operator<=>(FinMap const&) const = default;

   private:
    struct unchecked_t {};
    FinMap(unchecked_t, std::size_t cod_size, std::vector<std::size_t> t)
        : _cod_size(cod_size), _targets(std::move(t)) {}

    friend FinMap compose(FinMap const&, FinMap const&);

    std::size_t              _cod_size = 0;
    std::vector<std::size_t> _targets;
  };

  // g after f. Throws dimension_error unless f.cod_size() == g.dom_size().
  FinMap compose(FinMap const& g, FinMap const& f);

  bool is_injective(FinMap const& f);
  bool is_surjective(FinMap const& f);

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  class Subset {
   public:
    Subset() = default;
    // The empty subset of an n-element carrier.
    explicit Subset(std::size_t n)
        : _size(n), _words(kernels::words_for(n), 0) {}

    static Subset full(std::size_t n);
    // Throws dimension_error for members outside [0, n).
    static Subset of(std::size_t n, std::span<std::size_t const> members);
    static Subset of(std::size_t n, std::initializer_list<std::size_t> members);
    // Bit i of mask is element i; requires n <= 64.
    static Subset from_mask(std::size_t n, std::uint64_t mask);

    std::size_t size() const noexcept {
      return _size;
    }
    bool contains(std::size_t i) const noexcept {
      return (_words[i / kernels::word_bits] >> (i % kernels::word_bits)) & 1U;
    }
    void insert(std::size_t i) noexcept {
      _words[i / kernels::word_bits] |= word{1} << (i % kernels::word_bits);
    }
    void erase(std::size_t i) noexcept {
      _words[i / kernels::word_bits] &= ~(word{1} << (i % kernels::word_bits));
    }

    std::size_t              count() const noexcept;
    bool                     empty() const noexcept;
    bool                     is_full() const noexcept;
    std::vector<std::size_t> members() const;
    std::span<word const>    words() const noexcept {
      return _words;
    }

    Subset complement() const;
    bool   is_subset_of(Subset const& that) const;
    bool   intersects(Subset const& that) const;

    Subset& operator|=(Subset const& that);
    Subset& operator&=(Subset const& that);
    Subset& operator-=(Subset const& that);

    bool operator==(Subset const&) const = default;
    auto operator<=>(Subset const&) const = default;

   private:
    void require_same_size(Subset const& that) const;

    std::size_t       _size = 0;
    std::vector<word> _words;
  };

  Subset operator|(Subset a, Subset const& b);
  Subset operator&(Subset a, Subset const& b);
  Subset operator-(Subset a, Subset const& b);

  ////////////////////////////////////////////////////////////////////////
  // Rel
  ////////////////////////////////////////////////////////////////////////

  // A homogeneous relation on n elements: an n x n boolean matrix stored as
  // n bit rows. Pair (i, j) is bit j of row i.
  class Rel {
   public:
    Rel() = default;
    // The empty relation on n elements.
    explicit Rel(std::size_t n)
        : _size(n),
          _stride(kernels::words_for(n)),
          _bits(n * kernels::words_for(n), 0) {}

    // Throws dimension_error for pairs outside [0, n)^2.
    static Rel from_pairs(std::size_t                                      n,
                          std::span<std::pair<std::size_t, std::size_t> const> pairs);
    static Rel from_pairs(
        std::size_t                                                n,
        std::initializer_list<std::pair<std::size_t, std::size_t>> pairs);

    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t stride() const noexcept {
      return _stride;
    }
    bool test(std::size_t i, std::size_t j) const noexcept {
      return (_bits[i * _stride + j / kernels::word_bits]
              >> (j % kernels::word_bits))
             & 1U;
    }
    void set(std::size_t i, std::size_t j) noexcept {
      _bits[i * _stride + j / kernels::word_bits]
          |= word{1} << (j % kernels::word_bits);
    }
    void reset(std::size_t i, std::size_t j) noexcept {
      _bits[i * _stride + j / kernels::word_bits]
          &= ~(word{1} << (j % kernels::word_bits));
    }

    std::span<word const> row(std::size_t i) const noexcept {
      return {_bits.data() + i * _stride, _stride};
    }
    std::span<word> row(std::size_t i) noexcept {
      return {_bits.data() + i * _stride, _stride};
    }
    std::span<word const> words() const noexcept {
      return _bits;
    }
    std::span<word> words() noexcept {
      return _bits;
    }

    // Number of pairs.
    std::size_t count() const noexcept;
    // All pairs in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool operator==(Rel const&) const = default;
    auto operator<=>(Rel const&) const = default;

   private:
    std::size_t       _size   = 0;
    std::size_t       _stride = 0;
    std::vector<word> _bits;
  };

  std::size_t hash_value(Rel const& r) noexcept;

  // Identity relation on n elements.
  Rel delta(std::size_t n);
  // The full relation n x n.
  Rel full_rel(std::size_t n);

  // Binary operations throw dimension_error on size mismatch.
  Rel  rel_union(Rel const& r, Rel const& s);
  Rel  rel_intersection(Rel const& r, Rel const& s);
  Rel  rel_difference(Rel const& r, Rel const& s);
  Rel  opposite(Rel const& r);
  bool rel_subset(Rel const& r, Rel const& s);
  // Relational composite: (a, c) whenever (a, b) in r and (b, c) in s.
  Rel compose_rel(Rel const& r, Rel const& s);

  // Smallest transitive relation containing r (bit-row Warshall).
  Rel transitive_closure(Rel const& r);
  // r together with the diagonal. Not a transitive closure; kept as a
  // deliberately weaker closure for sensitivity experiments.
  Rel reflexive_closure(Rel const& r);
  // transitive_closure(r u r° u delta).
  Rel equivalence_closure(Rel const& r);

  // {(f a, f b) | (a, b) in r}, a relation on f.cod_size().
  Rel image_rel(FinMap const& f, Rel const& r);
  // {(a, b) | (f a, f b) in s}, a relation on f.dom_size().
  Rel pullback_rel(FinMap const& f, Rel const& s);
  // Eq(f) = {(a, b) | f a = f b}.
  Rel kernel_pair(FinMap const& f);
  // Pairs of r with both ends in b, re-indexed by increasing original index.
  Rel restrict_rel(Rel const& r, Subset const& b);

  bool is_reflexive(Rel const& r);
  bool is_transitive(Rel const& r);
  bool is_symmetric(Rel const& r);
  bool is_equivalence(Rel const& r);
  // r n r° is contained in the diagonal.
  bool is_antisymmetric(Rel const& r);

  // The canonical quotient map onto the classes of an equivalence relation,
  // classes numbered by their least member in ascending order. Throws
  // validation_error if e is not an equivalence relation.
  FinMap quotient_map(Rel const& e);

  // {a | f a in b}.
  Subset preimage(FinMap const& f, Subset const& b);
  // {f a | a in b}.
  Subset image(FinMap const& f, Subset const& b);
  // The map re-indexed onto the elements of b, in increasing order.
  FinMap restrict_map(FinMap const& f, Subset const& b);
  // The inclusion of b (re-indexed) into its carrier.
  FinMap inclusion_map(Subset const& b);

}  // namespace prestab

#endif  // PRESTAB_RELCORE_HPP_

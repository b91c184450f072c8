#ifndef PRESTAB_RELCORE_KERNELS_HPP_
#define PRESTAB_RELCORE_KERNELS_HPP_

// Word-level kernels behind the bit-row relation type. Every entry point has
// a portable scalar implementation; vector variants are compiled into their
// own translation units and picked once at runtime from the CPU features.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace prestab::kernels {

  using word = std::uint64_t;

  inline constexpr std::size_t word_bits = 64;

  constexpr std::size_t words_for(std::size_t bits) noexcept {
    return (bits + word_bits - 1) / word_bits;
  }

  struct KernelTable {
    std::string_view name;
    // dst[i] |= src[i]
    void (*or_into)(word* dst, word const* src, std::size_t n);
    // dst[i] &= src[i]
    void (*and_into)(word* dst, word const* src, std::size_t n);
    // dst[i] &= ~src[i]
    void (*andnot_into)(word* dst, word const* src, std::size_t n);
    // true iff (a[i] & ~b[i]) == 0 for all i
    bool (*is_subset)(word const* a, word const* b, std::size_t n);
    // true iff (a[i] & b[i]) != 0 for some i
    bool (*intersects)(word const* a, word const* b, std::size_t n);
    // In-place Warshall closure of an n x n bit matrix stored as n rows of
    // `stride` words: for every k, every row i with bit k set absorbs row k.
    void (*warshall)(word* rows, std::size_t n, std::size_t stride);
  };

  KernelTable const& scalar();

  // nullptr when the AVX2 variant was not built or the CPU lacks AVX2.
  KernelTable const* avx2();

  // The table used by the library: the widest variant the CPU supports.
  KernelTable const& active();

}  // namespace prestab::kernels

#endif  // PRESTAB_RELCORE_KERNELS_HPP_

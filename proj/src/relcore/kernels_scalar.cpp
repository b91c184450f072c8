#include "prestab/relcore/kernels.hpp"

namespace prestab::kernels {

  namespace {
    void or_into_scalar(word* dst, word const* src, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        dst[i] |= src[i];
      }
    }

    void and_into_scalar(word* dst, word const* src, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        dst[i] &= src[i];
      }
    }

    void andnot_into_scalar(word* dst, word const* src, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        dst[i] &= ~src[i];
      }
    }

    bool is_subset_scalar(word const* a, word const* b, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((a[i] & ~b[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects_scalar(word const* a, word const* b, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((a[i] & b[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    void warshall_scalar(word* rows, std::size_t n, std::size_t stride) {
      for (std::size_t k = 0; k < n; ++k) {
        word const* row_k = rows + k * stride;
        std::size_t const kw = k / word_bits;
        word const kb = word{1} << (k % word_bits);
        for (std::size_t i = 0; i < n; ++i) {
          word* row_i = rows + i * stride;
          if (row_i[kw] & kb) {
            or_into_scalar(row_i, row_k, stride);
          }
        }
      }
    }

    constexpr KernelTable scalar_table{"scalar",
                                       &or_into_scalar,
                                       &and_into_scalar,
                                       &andnot_into_scalar,
                                       &is_subset_scalar,
                                       &intersects_scalar,
                                       &warshall_scalar};
  }  // namespace

  KernelTable const& scalar() {
    return scalar_table;
  }

}  // namespace prestab::kernels

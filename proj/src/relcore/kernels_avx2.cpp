// Built with -mavx2; only reached through the runtime dispatch in
// kernels_dispatch.cpp after the CPU check.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace prestab::kernels {

  namespace {
    constexpr std::size_t lane_words = 4;

    inline __m256i load(word const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }

    inline void store(word* p, __m256i v) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
    }

    void or_into_avx2(word* dst, word const* src, std::size_t n) {
      std::size_t i = 0;
      for (; i + lane_words <= n; i += lane_words) {
        store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
      }
      for (; i < n; ++i) {
        dst[i] |= src[i];
      }
    }

    void and_into_avx2(word* dst, word const* src, std::size_t n) {
      std::size_t i = 0;
      for (; i + lane_words <= n; i += lane_words) {
        store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
      }
      for (; i < n; ++i) {
        dst[i] &= src[i];
      }
    }

    void andnot_into_avx2(word* dst, word const* src, std::size_t n) {
      std::size_t i = 0;
      for (; i + lane_words <= n; i += lane_words) {
        // _mm256_andnot_si256(a, b) computes ~a & b
        store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
      }
      for (; i < n; ++i) {
        dst[i] &= ~src[i];
      }
    }

    bool is_subset_avx2(word const* a, word const* b, std::size_t n) {
      std::size_t i = 0;
      for (; i + lane_words <= n; i += lane_words) {
        __m256i extra = _mm256_andnot_si256(load(b + i), load(a + i));
        if (!_mm256_testz_si256(extra, extra)) {
          return false;
        }
      }
      for (; i < n; ++i) {
        if ((a[i] & ~b[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects_avx2(word const* a, word const* b, std::size_t n) {
      std::size_t i = 0;
      for (; i + lane_words <= n; i += lane_words) {
        if (!_mm256_testz_si256(load(a + i), load(b + i))) {
          return true;
        }
      }
      for (; i < n; ++i) {
        if ((a[i] & b[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    void warshall_avx2(word* rows, std::size_t n, std::size_t stride) {
      for (std::size_t k = 0; k < n; ++k) {
        word const* row_k = rows + k * stride;
        std::size_t const kw = k / word_bits;
        word const kb = word{1} << (k % word_bits);
        for (std::size_t i = 0; i < n; ++i) {
          word* row_i = rows + i * stride;
          if (row_i[kw] & kb) {
            or_into_avx2(row_i, row_k, stride);
          }
        }
      }
    }

    constexpr KernelTable avx2_kernels{"avx2",
                                       &or_into_avx2,
                                       &and_into_avx2,
                                       &andnot_into_avx2,
                                       &is_subset_avx2,
                                       &intersects_avx2,
                                       &warshall_avx2};
  }  // namespace

  KernelTable const& detail::avx2_table() {
    return avx2_kernels;
  }

}  // namespace prestab::kernels

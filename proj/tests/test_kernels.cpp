#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "prestab/relcore/kernels.hpp"

using namespace prestab::kernels;

namespace {

  std::vector<word> random_words(std::mt19937_64& rng, std::size_t n) {
    std::vector<word> out(n);
    for (auto& w : out) {
      // Sparse words make subset and disjointness answers vary.
      w = rng() & rng() & rng();
    }
    return out;
  }

  void check_same(KernelTable const& a, KernelTable const& b) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {0, 1, 5, 63, 64, 65, 130, 300}) {
      for (int trial = 0; trial < 20; ++trial) {
        auto const x = random_words(rng, n);
        auto       y = random_words(rng, n);
        if (trial % 4 == 0) {
          y = x;
        }

        auto ra = x, rb = x;
        a.or_into(ra.data(), y.data(), n);
        b.or_into(rb.data(), y.data(), n);
        REQUIRE(ra == rb);

        ra = rb = x;
        a.and_into(ra.data(), y.data(), n);
        b.and_into(rb.data(), y.data(), n);
        REQUIRE(ra == rb);

        ra = rb = x;
        a.andnot_into(ra.data(), y.data(), n);
        b.andnot_into(rb.data(), y.data(), n);
        REQUIRE(ra == rb);

        auto sub = x;
        a.and_into(sub.data(), y.data(), n);
        REQUIRE(a.is_subset(x.data(), y.data(), n) == b.is_subset(x.data(), y.data(), n));
        REQUIRE(b.is_subset(sub.data(), y.data(), n));
        REQUIRE(a.intersects(x.data(), y.data(), n) == b.intersects(x.data(), y.data(), n));
      }

      std::size_t const stride = words_for(n);
      std::bernoulli_distribution coin(n == 0 ? 0.0 : 1.2 / static_cast<double>(n));
      std::vector<word> m(n * stride, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (coin(rng)) {
            m[i * stride + j / word_bits] |= word{1} << (j % word_bits);
          }
        }
      }
      auto ma = m, mb = m;
      a.warshall(ma.data(), n, stride);
      b.warshall(mb.data(), n, stride);
      REQUIRE(ma == mb);
    }
  }

}  // namespace

TEST_CASE("active table is one of the variants", "[kernels]") {
  auto const& act = active();
  CHECK((&act == &scalar() || &act == avx2()));
  CHECK(scalar().name == "scalar");
}

TEST_CASE("AVX2 kernels agree with the scalar reference", "[kernels]") {
  if (avx2() == nullptr) {
    SKIP("AVX2 variant not available on this build or CPU");
  }
  check_same(scalar(), *avx2());
}

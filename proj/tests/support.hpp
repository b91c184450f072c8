#ifndef PRESTAB_TESTS_SUPPORT_HPP_
#define PRESTAB_TESTS_SUPPORT_HPP_

// Small independent oracles shared by the unit tests. They work on plain
// pair sets and never call into the library's relation kernels.

#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "prestab/relcore.hpp"

namespace testing {

  using Pair  = std::pair<std::size_t, std::size_t>;
  using Pairs = std::set<Pair>;

  inline Pairs pairs_of(prestab::Rel const& r) {
    Pairs out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r.test(i, j)) {
          out.emplace(i, j);
        }
      }
    }
    return out;
  }

  // Chain pairs until nothing new appears.
  inline Pairs naive_closure(Pairs p) {
    for (bool grew = true; grew;) {
      grew = false;
      Pairs next = p;
      for (auto [a, b] : p) {
        for (auto [c, d] : p) {
          if (b == c && next.emplace(a, d).second) {
            grew = true;
          }
        }
      }
      p = std::move(next);
    }
    return p;
  }

  struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
      std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    }
    void unite(std::size_t a, std::size_t b) {
      parent[find(a)] = find(b);
    }
  };

  inline Pairs union_find_partition(std::size_t n, Pairs const& edges) {
    UnionFind uf(n);
    for (auto [a, b] : edges) {
      uf.unite(a, b);
    }
    Pairs out;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (uf.find(i) == uf.find(j)) {
          out.emplace(i, j);
        }
      }
    }
    return out;
  }

  // The relation on n elements whose pairs are the bits of mask, row major.
  inline prestab::Rel rel_from_mask(std::size_t n, std::uint64_t mask) {
    prestab::Rel r(n);
    for (std::size_t k = 0; k < n * n; ++k) {
      if ((mask >> k) & 1U) {
        r.set(k / n, k % n);
      }
    }
    return r;
  }

  inline prestab::Rel random_rel(std::mt19937_64& rng, std::size_t n,
                                 double density) {
    std::bernoulli_distribution coin(density);
    prestab::Rel r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (coin(rng)) {
          r.set(i, j);
        }
      }
    }
    return r;
  }

  // Every map from an a-element set to a b-element set, odometer order.
  inline std::vector<prestab::FinMap> all_maps(std::size_t a, std::size_t b) {
    std::vector<prestab::FinMap> out;
    if (a > 0 && b == 0) {
      return out;
    }
    std::vector<std::size_t> t(a, 0);
    while (true) {
      out.emplace_back(a, b, t);
      std::size_t i = a;
      while (i > 0 && ++t[i - 1] == b) {
        t[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
    }
  }

}  // namespace testing

#endif  // PRESTAB_TESTS_SUPPORT_HPP_

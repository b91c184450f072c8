#ifndef PRESTAB_SRC_LAB_INTERNAL_HPP_
#define PRESTAB_SRC_LAB_INTERNAL_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "prestab/lab.hpp"

namespace prestab::detail {

  class SuiteContext {
   public:
    SuiteContext(std::string_view name, std::size_t max_size,
                 SuiteOptions const& options)
        : opts(options), family(max_size) {
      report.suite    = std::string(name);
      report.max_size = max_size;
    }

    SuiteOptions const& opts;
    InstanceFamily      family;
    SuiteReport         report;

    std::size_t max_size() const noexcept {
      return family.max_size();
    }
    void fail(std::string witness) {
      ++report.failure_count;
      if (report.failures.size() < opts.max_failures) {
        report.failures.push_back(std::move(witness));
      }
    }
    void checked(std::size_t n = 1) noexcept {
      report.instances += n;
    }
    void checked_random(std::size_t n = 1) noexcept {
      report.random_instances += n;
    }

    std::span<Preorder const> probes() const noexcept {
      return family.upto(std::min(max_size(), opts.probe_max_size));
    }
    // Objects over which suites quantify morphisms; a prefix of the family,
    // so indices agree with family.morphisms().
    std::span<Preorder const> morphism_objects() const noexcept {
      return family.upto(std::min(max_size(), opts.morphism_max_size));
    }
  };

  inline std::string subset_string(Subset const& s) {
    std::string out = "{";
    bool        first = true;
    for (auto i : s.members()) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
    return out + "}";
  }

  inline std::string map_string(std::span<std::size_t const> t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(t[i]);
    }
    return out + "]";
  }

  inline std::string describe(Morphism const& f) {
    return to_string(f.dom()) + " -" + map_string(f.map().targets()) + "-> "
           + to_string(f.cod());
  }

  using SuiteFn = void (*)(SuiteContext&);

  void suite_enumeration(SuiteContext&);
  void suite_clopen_calculus(SuiteContext&);
  void suite_clopen_agreement(SuiteContext&);
  void suite_pretorsion(SuiteContext&);
  void suite_epi_mono(SuiteContext&);
  void suite_cokernel_characterization(SuiteContext&);
  void suite_zero_laws(SuiteContext&);
  void suite_congruence_laws(SuiteContext&);
  void suite_canonical_forms(SuiteContext&);
  void suite_coincidence(SuiteContext&);
  void suite_sigma_mono(SuiteContext&);
  void suite_sigma_coproduct(SuiteContext&);
  void suite_kernel_preservation(SuiteContext&);
  void suite_cokernel_stab(SuiteContext&);
  void suite_exactness(SuiteContext&);

  // Reference computations written directly from the definitions, sharing
  // nothing with the bit-row relation code.
  namespace oracle {
    using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

    inline Pairs pairs_of(Rel const& r) {
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

    // Adds (a, d) for (a, b), (b, d) until nothing changes.
    inline Pairs transitive_closure(Pairs r) {
      bool grew = true;
      while (grew) {
        grew = false;
        Pairs const snapshot = r;
        for (auto [a, b] : snapshot) {
          for (auto [c, d] : snapshot) {
            if (b == c && r.emplace(a, d).second) {
              grew = true;
            }
          }
        }
      }
      return r;
    }

    inline Pairs image(std::span<std::size_t const> f, Pairs const& r) {
      Pairs out;
      for (auto [a, b] : r) {
        out.emplace(f[a], f[b]);
      }
      return out;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        for (std::size_t i = 0; i < n; ++i) {
          _parent[i] = i;
        }
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // Weak components of a relation, as a representative per element.
    inline std::vector<std::size_t> component_roots(Rel const& r) {
      UnionFind uf(r.size());
      for (auto [a, b] : pairs_of(r)) {
        uf.unite(a, b);
      }
      std::vector<std::size_t> roots(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        roots[i] = uf.find(i);
      }
      return roots;
    }
  }  // namespace oracle

}  // namespace prestab::detail

#endif  // PRESTAB_SRC_LAB_INTERNAL_HPP_

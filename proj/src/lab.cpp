#include "prestab/lab.hpp"

#include <array>
#include <chrono>

#include "lab_internal.hpp"

namespace prestab {

  std::vector<Preorder> enumerate_preorders(std::size_t n) {
    if (n > max_enumerable_size) {
      throw resource_error("enumerate_preorders: n = " + std::to_string(n)
                           + " exceeds " + std::to_string(max_enumerable_size));
    }
    std::vector<std::pair<std::size_t, std::size_t>> positions;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          positions.emplace_back(i, j);
        }
      }
    }
    std::vector<Preorder> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positions.size());
         ++mask) {
      Rel r = delta(n);
      for (std::size_t k = 0; k < positions.size(); ++k) {
        if ((mask >> k) & 1U) {
          r.set(positions[k].first, positions[k].second);
        }
      }
      if (is_transitive(r)) {
        out.emplace_back(std::move(r));
      }
    }
    return out;
  }

  std::vector<Preorder> enumerate_preorders_upto(std::size_t max_size) {
    std::vector<Preorder> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
      auto level = enumerate_preorders(n);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::vector<Morphism> enumerate_morphisms(Preorder const& a,
                                            Preorder const& b) {
    std::vector<Morphism> out;
    for_each_monotone(a, b, [&](Morphism const& f) { out.push_back(f); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // InstanceFamily
  ////////////////////////////////////////////////////////////////////////

  InstanceFamily::InstanceFamily(std::size_t max_size) : _max_size(max_size) {
    for (std::size_t n = 0; n <= max_size; ++n) {
      auto level = enumerate_preorders(n);
      _preorders.insert(_preorders.end(), level.begin(), level.end());
      _size_end.push_back(_preorders.size());
    }
    _morphisms.resize(_preorders.size() * _preorders.size());
  }

  std::span<Preorder const> InstanceFamily::upto(std::size_t n) const noexcept {
    auto const end = _size_end[std::min(n, _max_size)];
    return std::span<Preorder const>(_preorders).first(end);
  }

  std::vector<Morphism> const& InstanceFamily::morphisms(std::size_t from,
                                                         std::size_t to) {
    auto& slot = _morphisms.at(from * _preorders.size() + to);
    if (!slot) {
      slot = enumerate_morphisms(_preorders[from], _preorders[to]);
    }
    return *slot;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Entry {
      std::string_view  name;
      detail::SuiteFn   run;
    };

    constexpr std::array<Entry, 15> registry{{
        {"enumeration", &detail::suite_enumeration},
        {"clopen_calculus", &detail::suite_clopen_calculus},
        {"clopen_agreement", &detail::suite_clopen_agreement},
        {"pretorsion", &detail::suite_pretorsion},
        {"epi_mono", &detail::suite_epi_mono},
        {"cokernel_characterization",
         &detail::suite_cokernel_characterization},
        {"zero_laws", &detail::suite_zero_laws},
        {"congruence_laws", &detail::suite_congruence_laws},
        {"canonical_forms", &detail::suite_canonical_forms},
        {"coincidence", &detail::suite_coincidence},
        {"sigma_mono", &detail::suite_sigma_mono},
        {"sigma_coproduct", &detail::suite_sigma_coproduct},
        {"kernel_preservation", &detail::suite_kernel_preservation},
        {"cokernel_stab", &detail::suite_cokernel_stab},
        {"exactness", &detail::suite_exactness},
    }};

    constexpr auto names = [] {
      std::array<std::string_view, registry.size()> out{};
      for (std::size_t i = 0; i < registry.size(); ++i) {
        out[i] = registry[i].name;
      }
      return out;
    }();
  }  // namespace

  std::span<std::string_view const> suite_names() {
    return names;
  }

  SuiteReport run_suite(std::string_view    name,
                        std::size_t         max_size,
                        SuiteOptions const& options) {
    auto const it = std::find_if(registry.begin(), registry.end(),
                                 [&](Entry const& e) { return e.name == name; });
    if (it == registry.end()) {
      throw usage_error("unknown suite '" + std::string(name) + "'");
    }
    if (max_size == 0) {
      throw usage_error("max size must be positive");
    }
    auto const          start = std::chrono::steady_clock::now();
    detail::SuiteContext ctx(name, max_size, options);
    it->run(ctx);
    ctx.report.elapsed = std::chrono::steady_clock::now() - start;
    return std::move(ctx.report);
  }

}  // namespace prestab

// One line per acceptance criterion; exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "prestab/lab.hpp"

using namespace prestab;
using clock_type = std::chrono::steady_clock;

namespace {

  int failed = 0;

  double seconds(clock_type::duration d) {
    return std::chrono::duration<double>(d).count();
  }

  void line(int n, bool ok, std::string const& what) {
    std::printf("criterion %2d: %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }

  std::string summary(SuiteReport const& r) {
    std::string s = r.suite + " max " + std::to_string(r.max_size) + ", "
                    + std::to_string(r.instances) + " instances";
    if (r.random_instances > 0) {
      s += ", " + std::to_string(r.random_instances) + " random";
    }
    s += ", " + std::to_string(r.failure_count) + " failures";
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.2fs", seconds(r.elapsed));
    return s + buf;
  }

  SuiteReport suite(int n, std::string_view name, std::size_t max,
                    SuiteOptions const& opts = {}) {
    auto r = run_suite(name, max, opts);
    for (auto const& f : r.failures) {
      std::printf("  [%d] %s\n", n, f.c_str());
    }
    return r;
  }

  // Reflexive transitive n x n matrices, counted without the library.
  std::size_t brute_force_count(std::size_t n) {
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) {
      auto at = [&](std::size_t i, std::size_t j) { return (m >> (i * n + j)) & 1U; };
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ok = ok && (i != j || at(i, i));
          for (std::size_t k = 0; k < n; ++k) {
            ok = ok && (!(at(i, j) && at(j, k)) || at(i, k));
          }
        }
      }
      count += ok;
    }
    return count;
  }

}  // namespace

int main() {
  auto const start = clock_type::now();

  {
    auto const t0 = clock_type::now();
    std::vector<std::size_t> const expected{1, 1, 4, 29};
    bool        ok = true;
    std::string counts;
    for (std::size_t n = 0; n < expected.size(); ++n) {
      auto const c = enumerate_preorders(n).size();
      ok           = ok && c == expected[n] && c == brute_force_count(n);
      counts += (n ? "," : "") + std::to_string(c);
    }
    auto const r  = suite(1, "enumeration", 3);
    auto const dt = seconds(clock_type::now() - t0);
    line(1, ok && r.passed() && dt < 1.0,
         "counts " + counts + ", brute force agrees, " + std::to_string(dt) + "s < 1s");
  }
  {
    auto const r = suite(2, "clopen_calculus", 4);
    line(2, r.passed() && seconds(r.elapsed) < 10.0, summary(r) + " (< 10s)");
  }
  {
    auto const r = suite(3, "clopen_agreement", 4);
    line(3, r.passed(), summary(r));
  }
  {
    auto const r = suite(4, "pretorsion", 3);
    line(4, r.passed() && seconds(r.elapsed) < 120.0, summary(r) + " (< 120s)");
  }
  {
    auto const r = suite(5, "cokernel_characterization", 3);
    line(5, r.passed(), summary(r));
  }
  {
    SuiteOptions opts;
    opts.random_trials = 10000;
    auto const r = suite(6, "congruence_laws", 2, opts);
    line(6, r.passed() && r.random_instances >= 10000,
         summary(r) + " (random at size 3)");
  }
  {
    auto const r = suite(7, "canonical_forms", 3);
    line(7, r.passed(), summary(r));
  }
  {
    auto const r = suite(8, "coincidence", 3);
    line(8, r.passed(), summary(r));
  }
  {
    auto const mono = suite(9, "sigma_mono", 3);
    auto const copr = suite(9, "sigma_coproduct", 3);
    line(9, mono.passed() && copr.passed(), summary(mono) + "; " + summary(copr));
  }
  {
    auto const r       = suite(10, "exactness", 3);
    auto const objects = enumerate_preorders_upto(3).size();
    auto const total   = seconds(clock_type::now() - start);
    line(10, r.passed() && r.instances == objects && total < 600.0,
         summary(r) + ", " + std::to_string(objects) + " objects of size <= 3, total "
             + std::to_string(total) + "s < 600s");
  }
  {
    SuiteOptions mutated;
    mutated.cokernel_closure = &reflexive_closure;
    auto const c5  = run_suite("cokernel_characterization", 3, mutated);
    auto const c10 = run_suite("exactness", 3, mutated);
    for (auto const* r : {&c5, &c10}) {
      if (!r->failures.empty()) {
        std::printf("  [11] %s witness: %s\n", r->suite.c_str(), r->failures.front().c_str());
      }
    }
    line(11, !c5.passed() && !c10.passed() && !c5.failures.empty() && !c10.failures.empty(),
         "reflexive closure: " + summary(c5) + "; " + summary(c10));
  }

  return failed == 0 ? 0 : 1;
}

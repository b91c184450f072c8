#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "prestab/lab.hpp"

using namespace prestab;

namespace {

  Preorder P(std::size_t n,
             std::initializer_list<std::pair<std::size_t, std::size_t>> p = {}) {
    return Preorder::from_pairs(n, p, true);
  }

  // Every n x n matrix, kept when reflexive and transitive.
  std::size_t brute_force_count(std::size_t n) {
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      auto at = [&](std::size_t i, std::size_t j) {
        return ((mask >> (i * n + j)) & 1U) != 0;
      };
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = at(i, i);
      }
      for (std::size_t i = 0; i < n && ok; ++i) {
        for (std::size_t j = 0; j < n && ok; ++j) {
          for (std::size_t k = 0; k < n && ok; ++k) {
            ok = !(at(i, j) && at(j, k)) || at(i, k);
          }
        }
      }
      count += ok ? 1 : 0;
    }
    return count;
  }

}  // namespace

TEST_CASE("preorder counts", "[lab]") {
  std::size_t const expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const all = enumerate_preorders(n);
    CHECK(all.size() == expected[n]);
    CHECK(all.size() == brute_force_count(n));
    std::set<Rel> distinct;
    for (auto const& a : all) {
      distinct.insert(a.rel());
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK(enumerate_preorders_upto(3).size() == 35);
  CHECK_THROWS_AS(enumerate_preorders(5), resource_error);
  CHECK(enumerate_preorders(3) == enumerate_preorders(3));
}

TEST_CASE("morphism counts", "[lab]") {
  auto const le = P(2, {{0, 1}});
  CHECK(enumerate_morphisms(Preorder::discrete(1), le).size() == 2);
  CHECK(enumerate_morphisms(le, Preorder::discrete(2)).size() == 2);
  CHECK(enumerate_morphisms(le, le).size() == 3);
  CHECK(enumerate_morphisms(Preorder(), le).size() == 1);
  CHECK(enumerate_morphisms(le, Preorder()).empty());
}

TEST_CASE("instance family", "[lab]") {
  InstanceFamily fam(3);
  CHECK(fam.preorders().size() == 35);
  CHECK(fam.upto(2).size() == 6);
  CHECK(fam.upto(0).size() == 1);
  auto const& m = fam.morphisms(2, 3);
  CHECK(&m == &fam.morphisms(2, 3));
}

TEST_CASE("suite registry and errors", "[lab]") {
  CHECK(suite_names().size() == 15);
  CHECK_THROWS_AS(run_suite("nosuchsuite", 3), usage_error);
  CHECK_THROWS_AS(run_suite("enumeration", 0), usage_error);
  CHECK_THROWS_AS(run_suite("enumeration", 5), resource_error);
}

TEST_CASE("small suites pass", "[lab]") {
  SuiteOptions opts;
  opts.random_trials = 200;
  opts.spot_checks   = 20;
  for (auto name : suite_names()) {
    auto const r = run_suite(name, 2, opts);
    INFO(name);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("suite reports are deterministic", "[lab]") {
  SuiteOptions opts;
  opts.random_trials = 500;
  auto const a = run_suite("congruence_laws", 2, opts);
  auto const b = run_suite("congruence_laws", 2, opts);
  CHECK(a.instances == b.instances);
  CHECK(a.random_instances == b.random_instances);
  CHECK(a.random_instances == 500);
}

#include <catch2/catch_amalgamated.hpp>

#include "prestab/relcore.hpp"
#include "support.hpp"

using namespace prestab;
using testing::Pairs;

namespace {

  Rel R(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> p) {
    return Rel::from_pairs(n, p);
  }

  Rel with_delta(Rel r) {
    return rel_union(r, delta(r.size()));
  }

}  // namespace

TEST_CASE("delta and basic operations", "[relcore]") {
  CHECK(delta(0).size() == 0);
  CHECK(delta(0).count() == 0);
  CHECK(delta(2) == R(2, {{0, 0}, {1, 1}}));
  CHECK(delta(3) == R(3, {{0, 0}, {1, 1}, {2, 2}}));

  CHECK(opposite(R(2, {{0, 1}})) == R(2, {{1, 0}}));
  CHECK(rel_union(delta(2), R(2, {{0, 1}})) == R(2, {{0, 0}, {1, 1}, {0, 1}}));
  CHECK(rel_intersection(R(2, {{0, 1}, {1, 0}}), R(2, {{0, 1}}))
        == R(2, {{0, 1}}));
  CHECK(rel_difference(full_rel(2), delta(2)) == R(2, {{0, 1}, {1, 0}}));

  CHECK_THROWS_AS(rel_union(delta(2), delta(3)), dimension_error);
  CHECK_THROWS_AS(rel_intersection(delta(2), delta(3)), dimension_error);
  CHECK_THROWS_AS(R(2, {{0, 2}}), dimension_error);
}

TEST_CASE("transitive closure examples", "[relcore]") {
  CHECK(transitive_closure(R(3, {{0, 1}, {1, 2}})) == R(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(transitive_closure(delta(3)) == delta(3));
  CHECK(transitive_closure(R(2, {{0, 1}, {1, 0}})) == full_rel(2));
  CHECK(transitive_closure(Rel(0)) == Rel(0));
}

TEST_CASE("equivalence closure examples", "[relcore]") {
  CHECK(equivalence_closure(R(3, {{0, 1}}))
        == R(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}));
  CHECK(equivalence_closure(Rel(2)) == delta(2));
  CHECK(equivalence_closure(R(3, {{0, 1}, {1, 2}})) == full_rel(3));
}

TEST_CASE("image, pullback and kernel pair examples", "[relcore]") {
  FinMap const f(3, 2, {0, 0, 1});
  CHECK(image_rel(f, with_delta(R(3, {{0, 1}}))) == delta(2));
  FinMap const g(2, 3, {1, 2});
  CHECK(image_rel(g, with_delta(R(2, {{0, 1}}))) == R(3, {{1, 1}, {2, 2}, {1, 2}}));
  CHECK(image_rel(FinMap::identity(3), R(3, {{2, 0}})) == R(3, {{2, 0}}));

  CHECK(pullback_rel(FinMap(2, 1, {0, 0}), delta(1)) == full_rel(2));
  CHECK(pullback_rel(g, with_delta(R(3, {{1, 2}}))) == with_delta(R(2, {{0, 1}})));
  CHECK_THROWS_AS(pullback_rel(g, delta(2)), dimension_error);
  CHECK_THROWS_AS(image_rel(g, delta(3)), dimension_error);

  CHECK(kernel_pair(f) == R(3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}));
  CHECK(kernel_pair(g) == delta(2));
  CHECK(kernel_pair(FinMap(2, 1, {0, 0})) == full_rel(2));
}

TEST_CASE("restriction examples", "[relcore]") {
  Rel const r = with_delta(R(3, {{0, 1}}));
  CHECK(restrict_rel(r, Subset::of(3, {0, 2})) == delta(2));
  CHECK(restrict_rel(r, Subset::full(3)) == r);
  CHECK(restrict_rel(r, Subset(3)) == Rel(0));
  CHECK(restrict_rel(with_delta(R(3, {{0, 2}})), Subset::of(3, {0, 2}))
        == with_delta(R(2, {{0, 1}})));
  CHECK_THROWS_AS(restrict_rel(r, Subset(2)), dimension_error);
}

TEST_CASE("relation predicates", "[relcore]") {
  Rel const d = delta(2);
  CHECK(is_reflexive(d));
  CHECK(is_transitive(d));
  CHECK(is_symmetric(d));
  CHECK(is_antisymmetric(d));

  Rel const le = with_delta(R(2, {{0, 1}}));
  CHECK(is_reflexive(le));
  CHECK(is_transitive(le));
  CHECK(is_antisymmetric(le));
  CHECK_FALSE(is_symmetric(le));

  CHECK_FALSE(is_transitive(R(3, {{0, 1}, {1, 2}})));
  CHECK(is_equivalence(full_rel(3)));
  CHECK_FALSE(is_antisymmetric(full_rel(2)));
}

TEST_CASE("maps and subsets", "[relcore]") {
  CHECK_THROWS_AS(FinMap(2, 2, {0, 2}), dimension_error);
  CHECK_THROWS_AS(FinMap(2, 2, {0}), dimension_error);
  FinMap const f(3, 2, {1, 0, 1});
  CHECK(compose(FinMap(2, 1, {0, 0}), f) == FinMap::constant(3, 1, 0));
  CHECK_THROWS_AS(compose(f, f), dimension_error);
  CHECK(is_surjective(f));
  CHECK_FALSE(is_injective(f));

  CHECK(preimage(f, Subset::of(2, {1})) == Subset::of(3, {0, 2}));
  CHECK(image(f, Subset::of(3, {1})) == Subset::of(2, {0}));
  CHECK(restrict_map(f, Subset::of(3, {1, 2})) == FinMap(2, 2, {0, 1}));
  CHECK(inclusion_map(Subset::of(4, {1, 3})) == FinMap(2, 4, {1, 3}));

  CHECK(quotient_map(equivalence_closure(R(4, {{3, 1}})))
        == FinMap(4, 3, {0, 1, 2, 1}));
  CHECK_THROWS_AS(quotient_map(R(2, {{0, 1}})), validation_error);

  Subset s = Subset::of(130, {0, 64, 129});
  CHECK(s.count() == 3);
  CHECK(s.complement().count() == 127);
  CHECK((s & s.complement()).empty());
  CHECK((s | s.complement()).is_full());
  CHECK(s.members() == std::vector<std::size_t>{0, 64, 129});
}

TEST_CASE("closures agree with the pair-chaining oracle on every relation of size <= 3",
          "[relcore][property]") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
      Rel const r  = testing::rel_from_mask(n, mask);
      Rel const tc = transitive_closure(r);
      REQUIRE(testing::pairs_of(tc) == testing::naive_closure(testing::pairs_of(r)));
      REQUIRE(transitive_closure(tc) == tc);
      REQUIRE(rel_subset(r, tc));

      Rel const ec = equivalence_closure(r);
      REQUIRE(testing::pairs_of(ec)
              == testing::union_find_partition(n, testing::pairs_of(r)));
      REQUIRE(is_equivalence(ec));
    }
  }
}

TEST_CASE("closure is monotone", "[relcore][property]") {
  std::size_t const n = 3;
  for (std::uint64_t a = 0; a < 512; a += 7) {
    for (std::uint64_t b = 0; b < 512; ++b) {
      if ((a & b) == a) {
        REQUIRE(rel_subset(transitive_closure(testing::rel_from_mask(n, a)),
                           transitive_closure(testing::rel_from_mask(n, b))));
      }
    }
  }
}

TEST_CASE("image, pullback, kernel pair and restriction laws at size <= 3",
          "[relcore][property]") {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      for (auto const& f : testing::all_maps(a, b)) {
        REQUIRE(is_equivalence(kernel_pair(f)));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (b * b)); ++mask) {
          Rel const s = testing::rel_from_mask(b, mask);
          REQUIRE(rel_subset(image_rel(f, pullback_rel(f, s)), s));
        }
        if (is_injective(f)) {
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a * a)); ++mask) {
            Rel const r = testing::rel_from_mask(a, mask);
            REQUIRE(rel_subset(r, pullback_rel(f, image_rel(f, r))));
          }
        }
      }
    }
  }

  for (std::uint64_t m1 = 0; m1 < 512; m1 += 5) {
    for (std::uint64_t m2 = 0; m2 < 512; m2 += 11) {
      Rel const r = testing::rel_from_mask(3, m1);
      Rel const s = testing::rel_from_mask(3, m2);
      for (std::uint64_t bm = 0; bm < 8; ++bm) {
        Subset const b = Subset::from_mask(3, bm);
        REQUIRE(restrict_rel(rel_union(r, s), b)
                == rel_union(restrict_rel(r, b), restrict_rel(s, b)));
        REQUIRE(restrict_rel(rel_intersection(r, s), b)
                == rel_intersection(restrict_rel(r, b), restrict_rel(s, b)));
      }
    }
  }
}

TEST_CASE("closure agrees with the oracle across word boundaries", "[relcore][property]") {
  std::mt19937_64 rng(20261015);
  for (std::size_t n : {5, 63, 64, 65, 70}) {
    Rel const r = testing::random_rel(rng, n, 1.5 / static_cast<double>(n));
    REQUIRE(testing::pairs_of(transitive_closure(r))
            == testing::naive_closure(testing::pairs_of(r)));
  }
}

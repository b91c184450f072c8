#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "prestab/lab.hpp"
#include "prestab/preord.hpp"
#include "support.hpp"

using namespace prestab;

namespace {

  Preorder P(std::size_t n,
             std::initializer_list<std::pair<std::size_t, std::size_t>> p = {}) {
    return Preorder::from_pairs(n, p, true);
  }

  Morphism M(Preorder a, Preorder b, std::vector<std::size_t> t) {
    std::size_t const n = a.size(), m = b.size();
    return Morphism(std::move(a), std::move(b), FinMap(n, m, std::move(t)));
  }

}  // namespace

TEST_CASE("construction validates the relation", "[preord]") {
  CHECK_THROWS_AS(Preorder(Rel::from_pairs(3, {{0, 1}, {1, 2}})), validation_error);
  CHECK_THROWS_AS(Preorder::from_pairs(3, {{0, 1}, {1, 2}}), validation_error);
  CHECK(Preorder::from_pairs(3, {{0, 1}, {1, 2}}, true) == Preorder::chain(3));
  CHECK_THROWS_AS(Preorder(Carrier(2), delta(3)), dimension_error);
  CHECK(Preorder().size() == 0);
  CHECK(to_string(P(3, {{0, 1}})) == "(3; 0->1)");
  CHECK_THROWS_AS(M(P(2, {{0, 1}}), Preorder::discrete(2), {0, 1}), validation_error);
}

TEST_CASE("trivial morphisms", "[preord]") {
  CHECK(is_trivial(M(Preorder::discrete(2), P(2, {{0, 1}}), {0, 1})));
  CHECK_FALSE(is_trivial(Morphism::identity(P(2, {{0, 1}}))));
  CHECK(is_trivial(M(P(2, {{0, 1}}), Preorder::discrete(1), {0, 0})));
}

TEST_CASE("Z-kernel examples", "[preord]") {
  auto const f = M(P(3, {{0, 1}}), P(2, {{0, 1}}), {0, 1, 1});
  auto const k = z_kernel(f);
  CHECK(k.dom() == Preorder::discrete(3));
  CHECK(k.map() == FinMap::identity(3));
  CHECK(k.cod() == f.dom());

  auto const t = M(P(2, {{0, 1}}), Preorder::discrete(1), {0, 0});
  CHECK(z_kernel(t).dom() == t.dom());
  CHECK(z_kernel(t) == Morphism::identity(t.dom()));
}

TEST_CASE("Z-cokernel examples", "[preord]") {
  auto const le = P(2, {{0, 1}});
  auto const id = z_cokernel(Morphism::identity(le));
  CHECK(id.cod() == Preorder::discrete(1));
  CHECK(id.map() == FinMap(2, 1, {0, 0}));

  auto const pt = z_cokernel(M(Preorder::discrete(1), le, {0}));
  CHECK(pt.cod() == le);
  CHECK(pt.map() == FinMap::identity(2));

  auto const f     = M(le, Preorder::chain(3), {1, 2});
  auto const trace = z_cokernel_trace(f);
  CHECK(trace.q.map() == FinMap(3, 2, {0, 1, 1}));
  CHECK(trace.q.cod() == le);
  CHECK(trace.u_closure
        == Rel::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}, {2, 1}}));
  CHECK(is_trivial(compose(trace.q, f)));
}

TEST_CASE("universal property checks", "[preord]") {
  auto const probes = enumerate_preorders_upto(3);
  auto const f      = M(P(2, {{0, 1}}), Preorder::chain(3), {1, 2});
  CHECK(verify_z_universal(z_kernel(f), f, UniversalSide::kernel, probes));
  CHECK(verify_z_universal(z_cokernel(f), f, UniversalSide::cokernel, probes));

  auto const id = Morphism::identity(P(2, {{0, 1}}));
  auto const why = z_universal_failure(id, id, UniversalSide::cokernel, probes);
  REQUIRE(why.has_value());
  CHECK_FALSE(why->empty());
  CHECK_THROWS_AS(z_universal_failure(id, f, UniversalSide::cokernel, probes),
                  composition_error);
}

TEST_CASE("coproducts", "[preord]") {
  auto const c1 = coproduct(Preorder::discrete(1), Preorder::discrete(1));
  CHECK(c1.object == Preorder::discrete(2));
  CHECK(c1.left.map() == FinMap(1, 2, {0}));
  CHECK(c1.right.map() == FinMap(1, 2, {1}));
  CHECK(coproduct(P(2, {{0, 1}}), Preorder::discrete(1)).object == P(3, {{0, 1}}));
  CHECK(coproduct(Preorder(), P(2, {{1, 0}})).object == P(2, {{1, 0}}));

  auto const a  = P(2, {{0, 1}});
  auto const cp = coproduct(a, Preorder::discrete(1));
  auto const h  = copair(cp, Morphism::identity(a), M(Preorder::discrete(1), a, {0}));
  CHECK(h.map() == FinMap(3, 2, {0, 1, 0}));
  CHECK_THROWS_AS(copair(cp, Morphism::identity(a), Morphism::identity(a)),
                  composition_error);
}

TEST_CASE("open and clopen subsets", "[preord]") {
  auto const a = P(3, {{0, 1}});
  CHECK(is_open(a, Subset::of(3, {0})));
  CHECK_FALSE(is_clopen(a, Subset::of(3, {0})));
  CHECK(is_clopen(a, Subset::of(3, {0, 1})));
  CHECK(is_clopen(a, Subset(3)));
  CHECK(is_clopen(a, Subset::full(3)));
  CHECK_THROWS_AS(is_open(a, Subset(2)), dimension_error);

  CHECK(clopen_components(a).blocks
        == std::vector<Subset>{Subset::of(3, {0, 1}), Subset::of(3, {2})});
  CHECK(clopen_components(Preorder::discrete(3)).blocks.size() == 3);
  CHECK(clopen_components(Preorder::indiscrete(3)).blocks.size() == 1);

  CHECK(enumerate_clopens(a)
        == std::vector<Subset>{Subset(3), Subset::of(3, {0, 1}), Subset::of(3, {2}),
                               Subset::full(3)});
  CHECK(enumerate_clopens(Preorder::discrete(2))
        == std::vector<Subset>{Subset(2), Subset::of(2, {0}), Subset::of(2, {1}),
                               Subset::full(2)});
  CHECK(enumerate_clopens(Preorder::indiscrete(2))
        == std::vector<Subset>{Subset(2), Subset::full(2)});
  CHECK_THROWS_AS(enumerate_clopens(Preorder::discrete(21)), resource_error);
  CHECK_NOTHROW(enumerate_clopens(Preorder::discrete(21), 21));

  CHECK(is_fibration_pair(a, Subset::of(3, {0, 1})));
  CHECK_FALSE(is_fibration_pair(a, Subset::of(3, {1})));
  // the edge 0->1 enters {1}: the second-projection square breaks
  CHECK(square_is_pullback(a, Subset::of(3, {1}), Square::I));
  CHECK_FALSE(square_is_pullback(a, Subset::of(3, {1}), Square::III));
  CHECK_FALSE(square_is_pullback(a, Subset::of(3, {0}), Square::I));
  CHECK(is_fibration_pair(a, Subset::full(3)));
}

TEST_CASE("pretorsion theory examples", "[preord]") {
  CHECK(symmetrization(P(2, {{0, 1}})) == delta(2));
  CHECK(symmetrization(Preorder::indiscrete(2)) == full_rel(2));
  CHECK(symmetrization(Preorder::discrete(3)) == delta(3));

  auto const seq = torsion_sequence(P(3, {{0, 1}, {1, 0}, {1, 2}}));
  CHECK(seq.kernel_part.dom() == P(3, {{0, 1}, {1, 0}}));
  CHECK(seq.kernel_part.map() == FinMap::identity(3));
  CHECK(seq.quotient_part.cod() == P(2, {{0, 1}}));
  CHECK(seq.quotient_part.map() == FinMap(3, 2, {0, 0, 1}));

  auto const d = torsion_sequence(Preorder::discrete(2));
  CHECK(d.kernel_part == Morphism::identity(Preorder::discrete(2)));
  CHECK(d.quotient_part == Morphism::identity(Preorder::discrete(2)));

  auto const ind = torsion_sequence(Preorder::indiscrete(2));
  CHECK(ind.kernel_part.dom() == Preorder::indiscrete(2));
  CHECK(ind.quotient_part.cod() == Preorder::discrete(1));

  CHECK(classify(Preorder::discrete(2)) == Classification{true, true, true});
  CHECK(classify(P(2, {{0, 1}})) == Classification{false, true, false});
  CHECK(classify(Preorder::indiscrete(2)) == Classification{true, false, false});

  CHECK(from_endofunction(FinMap::identity(2)) == Preorder::discrete(2));
  CHECK(from_endofunction(FinMap(2, 2, {0, 0})) == P(2, {{0, 1}}));
  CHECK(from_endofunction(FinMap(2, 2, {1, 0})) == Preorder::indiscrete(2));
  CHECK_THROWS_AS(from_endofunction(FinMap(2, 3, {0, 0})), dimension_error);
}

TEST_CASE("Z-cokernel construction matches oracles for every morphism at size <= 3",
          "[preord][property]") {
  InstanceFamily fam(3);
  auto const     objs = fam.preorders();
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      for (auto const& f : fam.morphisms(i, j)) {
        auto const t = z_cokernel_trace(f);
        // W: union-find over the image of rho
        testing::Pairs img;
        for (auto [a, b] : testing::pairs_of(f.dom().rel())) {
          img.emplace(f[a], f[b]);
        }
        REQUIRE(testing::pairs_of(t.equivalence)
                == testing::union_find_partition(f.cod().size(), img));
        REQUIRE(kernel_pair(t.q.map()) == t.equivalence);
        // tau is the image of the closure of sigma together with img°
        auto u = testing::pairs_of(f.cod().rel());
        for (auto [a, b] : img) {
          u.emplace(b, a);
        }
        auto const closed = testing::naive_closure(u);
        REQUIRE(testing::pairs_of(t.u_closure) == closed);
        testing::Pairs tau;
        for (auto [a, b] : closed) {
          tau.emplace(t.q[a], t.q[b]);
        }
        REQUIRE(testing::pairs_of(t.q.cod().rel()) == tau);
        REQUIRE(is_trivial(compose(t.q, f)));
        REQUIRE(is_trivial(compose(f, z_kernel(f))) );
      }
    }
  }
}

TEST_CASE("clopen characterizations agree on random preorders up to size 8",
          "[preord][property]") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t const n = 1 + rng() % 8;
    auto const a = Preorder(transitive_closure(
        rel_union(testing::random_rel(rng, n, 0.15), delta(n))));
    Subset b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1U) {
        b.insert(i);
      }
    }
    bool union_of_components = true;
    for (auto const& k : a.components()) {
      if (k.intersects(b) && !k.is_subset_of(b)) {
        union_of_components = false;
      }
    }
    REQUIRE(is_clopen(a, b) == union_of_components);
    REQUIRE(is_fibration_pair(a, b) == union_of_components);
  }
}

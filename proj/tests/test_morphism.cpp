#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "wilson/catalog.hpp"
#include "wilson/morphism.hpp"

using namespace wilson;

namespace {

  constexpr Point u = PartialMap::undefined;

  Subset s_of(std::initializer_list<Point> pts) {
    return to_subset(std::vector<Point>(pts));
  }

  // The 4-point design with block {1,2,3} and the pairs through 0.
  Pbd np3() {
    return near_pencil(3);
  }

  template <typename Visit>
  void for_each_partial_map(std::size_t v, Visit&& visit) {
    std::vector<std::size_t> digits(v, 0);
    std::vector<Point>       t(v);
    while (true) {
      for (std::size_t i = 0; i < v; ++i) {
        t[i] = digits[i] == v ? u : static_cast<Point>(digits[i]);
      }
      visit(PartialMap(v, v, t));
      std::size_t i = 0;
      while (i < v && ++digits[i] == v + 1) {
        digits[i++] = 0;
      }
      if (i == v) {
        break;
      }
    }
  }

}  // namespace

TEST_CASE("partial maps") {
  PartialMap const f(4, 3, {0, u, 2, 0});
  CHECK(f.domain() == s_of({0, 2, 3}));
  CHECK(f.co_domain() == s_of({1}));
  CHECK(f.image() == s_of({0, 2}));
  CHECK(f.rank() == 2);
  CHECK(f.preimage(s_of({0})) == s_of({0, 3}));
  CHECK(thrown_code([] { PartialMap(2, 2, {0, 2}); }) == Errc::point_out_of_range);
  CHECK(PartialMap::identity(3).is_permutation());
  CHECK(PartialMap::identity(3).is_idempotent());
  CHECK(PartialMap::empty(3, 3).image() == 0);
  CHECK(PartialMap::constant(4, 4, s_of({1, 2}), 3) == PartialMap(4, 4, {u, 3, 3, u}));
}

TEST_CASE("wilson preimage") {
  CHECK(wilson_preimage(PartialMap::empty(4, 4), 0) == full_set(4));
  PartialMap const total(3, 3, {1, 2, 1});
  CHECK(wilson_preimage(total, s_of({1})) == s_of({0, 2}));
  PartialMap const g(3, 3, {u, 0, 1});
  CHECK(wilson_preimage(g, 0) == s_of({0}));
}

TEST_CASE("morphisms by the open set test") {
  Pbd const fano = projective_space(2, 2);
  CHECK(is_morphism(PartialMap::identity(7), fano, fano));
  // x -> 2x in the cyclic labelling 0..6 with lines {i, i+1, i+3} mod 7
  // is a multiplier automorphism.
  Pbd const          cyc = cyclic_sts(7, {{0, 1, 3}});
  std::vector<Point> t(7);
  for (Point p = 0; p < 7; ++p) {
    t[p] = (2 * p) % 7;
  }
  CHECK(is_morphism(PartialMap(7, 7, t), cyc, cyc));

  Subset const open = full_set(7) & ~to_subset(fano.blocks()[0]);
  CHECK(is_morphism(PartialMap::constant(7, 7, open, 3), fano, fano));
  CHECK_FALSE(is_morphism(PartialMap::constant(7, 7, s_of({0, 1}), 3), fano, fano));
}

TEST_CASE("blockwise test examples") {
  Pbd const x = np3();
  CHECK(is_morphism_blockwise(PartialMap(4, 4, {0, 1, 1, 1}), x, x));
  CHECK(is_morphism(PartialMap(4, 4, {0, 1, 1, 1}), x, x));
  Pbd const fano = projective_space(2, 2);
  Block const b  = fano.blocks()[0];
  std::vector<Point> t(7);
  for (Point p = 0; p < 7; ++p) {
    t[p] = p;
  }
  t[b[0]] = b[1];
  t[b[1]] = b[1];
  t[b[2]] = b[2];
  CHECK_FALSE(is_morphism_blockwise(PartialMap(7, 7, t), fano, fano));
}

TEST_CASE("the two characterisations agree on every partial self-map of small designs") {
  for (auto const& [name, x] : erection_catalog()) {
    if (x.size() > 6) {
      continue;
    }
    INFO(name);
    auto const           subs = oracle::subsystems(x.size(), x.blocks());
    MorphismTester const tester(x, x);
    std::size_t          disagreements = 0;
    for_each_partial_map(x.size(), [&](PartialMap const& f) {
      bool const a = tester.is_morphism(f);
      bool const b = is_morphism_blockwise(f, x, x);
      bool const c = oracle::is_morphism(f, subs, subs, x.size());
      disagreements += (a != b) || (a != c) || (is_morphism(f, x, x) != a);
    });
    CHECK(disagreements == 0);
  }
}

TEST_CASE("open morphisms") {
  Pbd const        x = np3();
  PartialMap const f(4, 4, {1, 1, 2, 3});
  CHECK(is_morphism(f, x, x));
  CHECK_FALSE(is_open_morphism(f, x, x));
  CHECK(is_open_morphism(PartialMap::identity(4), x, x));
  CHECK(thrown_code([&] { is_open_morphism(PartialMap(4, 4, {0, 1, 1, 2}), x, x); }) == Errc::not_a_morphism);
}

TEST_CASE("composition") {
  PartialMap const f(3, 3, {1, u, 0});
  CHECK(compose(PartialMap::identity(3), f) == f);
  CHECK(compose(f, PartialMap::identity(3)) == f);
  CHECK(compose(f, f) == PartialMap(3, 3, {u, u, 1}));
  CHECK(thrown_code([&] { compose(f, PartialMap::identity(4)); }) == Errc::size_mismatch);

  // (p', O')(p, O) = (p', O) if p in O', else the empty map.
  Subset const o  = s_of({0, 1});
  Subset const o2 = s_of({2, 3});
  CHECK(compose(PartialMap::constant(4, 4, o2, 1), PartialMap::constant(4, 4, o, 2))
        == PartialMap::constant(4, 4, o, 1));
  CHECK(compose(PartialMap::constant(4, 4, o2, 1), PartialMap::constant(4, 4, o, 0)) == PartialMap::empty(4, 4));
}

TEST_CASE("morphisms are closed under composition") {
  for (auto const& x : {np3(), complete_graph(4), hall_plane6()}) {
    auto const              all = oracle::all_morphisms(x.size(), x.blocks());
    std::vector<PartialMap> ms(all.begin(), all.end());
    std::mt19937            rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    for (int i = 0; i < 2000; ++i) {
      CHECK(is_morphism(compose(ms[pick(rng)], ms[pick(rng)]), x, x));
    }
  }
}

TEST_CASE("kernels") {
  CHECK(kernel(PartialMap::identity(3)).classes == std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(kernel(PartialMap::constant(4, 4, s_of({1, 3}), 0)).classes == std::vector<std::vector<Point>>{{1, 3}});
  CHECK(kernel(PartialMap(4, 4, {2, u, 0, 2})).classes == std::vector<std::vector<Point>>{{0, 3}, {2}});
}

TEST_CASE("degree") {
  Pbd const fano = projective_space(2, 2);
  CHECK(degree(PartialMap::identity(7), fano) == 1);
  CHECK(degree(PartialMap::constant(7, 7, full_set(7), 0), fano) == 7);
  CHECK(thrown_code([&] { degree(PartialMap::empty(7, 7), fano); }) == Errc::empty_image);
  CHECK(thrown_code([&] { degree(PartialMap::identity(6), hall_plane6()); }) == Errc::not_uniform);
  CHECK(thrown_code([&] { degree(PartialMap(7, 7, {0, 0, 1, u, u, u, u}), fano); }) == Errc::non_uniform_fibers);
}

TEST_CASE("a rank-2 linear map of the Fano plane has degree 2") {
  // Points are nonzero vectors of GF(2)^3 with p <-> p + 1; the map
  // (a, b, c) -> (a, b, 0) kills the vector 4 and sends the plane onto the
  // line {1, 2, 3}.
  auto const       blocks = oracle::fano_by_xor();
  Pbd const        fano   = validate_pbd(7, blocks);
  std::vector<Point> t(7);
  for (unsigned x = 1; x < 8; ++x) {
    unsigned const y = x & 3U;
    t[x - 1]         = y == 0 ? u : y - 1;
  }
  PartialMap const f(7, 7, t);
  CHECK(is_morphism(f, fano, fano));
  CHECK(is_open_morphism(f, fano, fano));
  CHECK(degree(f, fano) == 2);
  CHECK(cardinality(f.domain()) == 6);
  CHECK(f.rank() == 3);

  FiberGdd const g = fiber_gdd(f, fano, fano, f.image());
  CHECK(g.points.size() == 6);
  CHECK(is_transversal_design(g.gdd, 3, 2));
}

TEST_CASE("fiber GDD of the identity on a block") {
  Pbd const      fano = projective_space(2, 2);
  Subset const   b    = to_subset(fano.blocks()[2]);
  FiberGdd const g    = fiber_gdd(PartialMap::identity(7), fano, fano, b);
  CHECK(g.gdd.v == 3);
  CHECK(g.gdd.groups.size() == 3);
  CHECK(g.gdd.blocks.size() == 1);
  CHECK(thrown_code([&] { fiber_gdd(PartialMap::empty(7, 7), fano, fano, b); }) == Errc::empty_fiber);
}

TEST_CASE("the canonical morphism of Wilson's STS(19)") {
  LatinSquare const sq = LatinSquare::cyclic(6);
  Pbd const         s  = wilson_sts19(sq);
  Pbd const         y  = trivial_pbd(3);
  PartialMap const  f  = canonical_sts19_morphism(sq);
  CHECK(f.co_domain() == bit(sts19_hub));
  CHECK(is_morphism(f, s, y));
  CHECK(is_morphism_blockwise(f, s, y));
  for (Point q = 0; q < 3; ++q) {
    CHECK(cardinality(f.preimage(bit(q))) == 6);
  }
  // Each transversal block {R_i, C_j, L(i,j)} maps onto {0,1,2}.
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Subset const blk = bit(static_cast<Point>(i)) | bit(static_cast<Point>(6 + j))
                         | bit(static_cast<Point>(12 + sq(i, j)));
      CHECK(f.image_of(blk) == full_set(3));
    }
  }
  FiberGdd const g = fiber_gdd(f, s, y, full_set(3));
  CHECK(g.points.size() == 18);
  CHECK(is_transversal_design(g.gdd, 3, 6));
}

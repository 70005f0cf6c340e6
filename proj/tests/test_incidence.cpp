#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "wilson/catalog.hpp"
#include "wilson/galois_field.hpp"
#include "wilson/incidence.hpp"
#include "wilson/mld.hpp"

using namespace wilson;

namespace {

  // Every pair in exactly one block, counted directly.
  bool pairs_once(Pbd const& x) {
    std::size_t const v = x.size();
    for (Point p = 0; p < v; ++p) {
      for (Point q = p + 1; q < v; ++q) {
        int hits = 0;
        for (auto const& b : x.blocks()) {
          bool const hp = std::find(b.begin(), b.end(), p) != b.end();
          bool const hq = std::find(b.begin(), b.end(), q) != b.end();
          hits += hp && hq;
        }
        if (hits != 1) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t count_of_size(Pbd const& x, std::size_t k) {
    return static_cast<std::size_t>(
        std::count_if(x.blocks().begin(), x.blocks().end(), [&](Block const& b) { return b.size() == k; }));
  }

}  // namespace

TEST_CASE("validate_pbd accepts Fano and rejects the excluded cases") {
  Pbd const fano = validate_pbd(7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6}});
  CHECK(fano.blocks().size() == 7);
  CHECK(pairs_once(fano));

  CHECK(thrown_code([] { validate_pbd(3, {{0, 1, 2}}); }) == Errc::degenerate_case);
  CHECK(thrown_code([] { validate_pbd(1, {}); }) == Errc::degenerate_case);
  CHECK(thrown_code([] { validate_pbd(4, {}); }) == Errc::degenerate_case);
  CHECK(thrown_code([] { validate_pbd(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1}}); }) == Errc::pair_double_covered);
  CHECK(thrown_code([] { validate_pbd(3, {{0}, {0, 1, 2}}); }) == Errc::block_too_small);
  CHECK(thrown_code([] { validate_pbd(3, {{0, 1, 5}}); }) == Errc::point_out_of_range);

  try {
    validate_pbd(4, {{0, 1, 2}, {0, 3}});
    FAIL("expected PairUncovered");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::pair_uncovered);
    CHECK(e.witness() == std::vector<std::uint32_t>{1, 3});
  }
}

TEST_CASE("degenerate escape hatch admits the trivial system on three points") {
  Pbd const y = validate_pbd(3, {{2, 0, 1}}, true);
  CHECK(y.is_degenerate());
  CHECK(y == trivial_pbd(3));
  CHECK(y.blocks().front() == Block{0, 1, 2});
}

TEST_CASE("blocks are canonical regardless of input order") {
  Pbd const a = validate_pbd(4, {{2, 3}, {1, 0, 2}, {3, 0}, {1, 3}});
  Pbd const b = validate_pbd(4, {{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(a == b);
  CHECK(a.blocks().front() == Block{0, 1, 2});
}

TEST_CASE("complete graphs and near pencils") {
  CHECK(complete_graph(3).blocks() == std::vector<Block>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(complete_graph(4).blocks().size() == 6);
  CHECK(complete_graph(5).blocks().size() == 10);
  CHECK(pairs_once(complete_graph(5)));
  CHECK(thrown_code([] { complete_graph(2); }).has_value());

  Pbd const np3 = near_pencil(3);
  CHECK(np3.size() == 4);
  CHECK(np3.blocks() == std::vector<Block>{{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}});
  CHECK(near_pencil(4).blocks().size() == 5);
  CHECK(thrown_code([] { near_pencil(2); }) == Errc::bad_params);
}

TEST_CASE("near pencil equals M(n,1) after moving the hub to the end") {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Point> perm(n + 1);
    perm[0] = static_cast<Point>(n);
    for (Point p = 1; p <= n; ++p) {
      perm[p] = p - 1;
    }
    CHECK(relabel(near_pencil(n), perm) == mld_design(n, 1).design);
  }
}

TEST_CASE("projective and affine spaces") {
  Pbd const fano = projective_space(2, 2);
  CHECK(fano.size() == 7);
  CHECK(fano.blocks().size() == 7);
  CHECK(fano.uniform_block_size() == 3U);

  Pbd const pg32 = projective_space(3, 2);
  CHECK(pg32.size() == 15);
  CHECK(pg32.blocks().size() == 35);
  CHECK(pg32.uniform_block_size() == 3U);

  Pbd const pg23 = projective_space(2, 3);
  CHECK(pg23.size() == 13);
  CHECK(pg23.blocks().size() == 13);
  CHECK(pg23.uniform_block_size() == 4U);

  Pbd const ag23 = affine_space(2, 3);
  CHECK(ag23.size() == 9);
  CHECK(ag23.blocks().size() == 12);
  CHECK(ag23.uniform_block_size() == 3U);

  CHECK(affine_space(2, 2) == complete_graph(4));
  CHECK(affine_space(3, 2).blocks().size() == 28);

  CHECK(projective_space(2, 4).size() == 21);
  CHECK(affine_space(2, 9).blocks().size() == 90);
  CHECK(thrown_code([] { projective_space(2, 6); }) == Errc::unsupported_field);
  CHECK(thrown_code([] { affine_space(2, 16); }) == Errc::unsupported_field);

  for (auto const& x : {fano, pg32, pg23, ag23}) {
    CHECK(pairs_once(x));
  }
}

TEST_CASE("2-dimensional subspaces of GF(2)^4 counted by brute force") {
  // Spans of pairs of distinct nonzero vectors; each plane counted once.
  std::set<std::set<unsigned>> planes;
  for (unsigned a = 1; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      planes.insert({a, b, a ^ b});
    }
  }
  CHECK(planes.size() == projective_space(3, 2).blocks().size());
}

TEST_CASE("Galois fields satisfy the field axioms on small orders") {
  for (unsigned q : {2U, 3U, 4U, 5U, 7U, 8U, 9U}) {
    GaloisField const f(q);
    for (unsigned a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
      }
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("Hall's six point design") {
  Pbd const h = hall_plane6();
  CHECK(h.size() == 6);
  CHECK(h.blocks().size() == 9);
  CHECK(count_of_size(h, 3) == 3);
  CHECK(count_of_size(h, 2) == 6);
  CHECK(pairs_once(h));
  // {2,4,6} in the 1-based labels: the pairs inside it are 2-blocks.
  CHECK(h.line(1, 3).size() == 2);
  CHECK(h.line(1, 5).size() == 2);
  CHECK(h.line(3, 5).size() == 2);
}

TEST_CASE("Latin squares and transversal designs") {
  CHECK(thrown_code([] { LatinSquare(2, {0, 1, 0, 1}); }) == Errc::not_latin_square);
  CHECK(thrown_code([] { LatinSquare(2, {0, 1, 1, 2}); }) == Errc::not_latin_square);

  Gdd const td2 = td3_from_latin(LatinSquare::cyclic(2));
  CHECK(td2.v == 6);
  CHECK(td2.blocks.size() == 4);
  CHECK(is_transversal_design(td2, 3, 2));

  Gdd const td7 = td3_from_latin(LatinSquare::cyclic(7));
  CHECK(td7.v == 21);
  CHECK(td7.blocks.size() == 49);
  CHECK(is_transversal_design(td7, 3, 7));
  for (auto const& b : td7.blocks) {
    std::set<std::size_t> groups_hit;
    for (Point p : b) {
      for (std::size_t g = 0; g < td7.groups.size(); ++g) {
        if (std::find(td7.groups[g].begin(), td7.groups[g].end(), p) != td7.groups[g].end()) {
          groups_hit.insert(g);
        }
      }
    }
    CHECK(groups_hit.size() == 3);
  }

  Pbd const p6 = gdd_to_pbd(td2);
  CHECK(p6.size() == 6);
  CHECK(count_of_size(p6, 2) == 3);
  CHECK(count_of_size(p6, 3) == 4);

  CHECK(thrown_code([] { validate_gdd(3, {{0, 1}, {2}}, {{0, 1, 2}}); }) == Errc::gdd_axiom_violation);
}

TEST_CASE("GDD and PBD views are mutually inverse on TD(3,m)") {
  for (std::size_t m = 2; m <= 7; ++m) {
    Gdd const td  = td3_from_latin(LatinSquare::cyclic(m));
    Pbd const pbd = gdd_to_pbd(td);
    Gdd const back = gdd_from_pbd(pbd, td.groups);
    CHECK(back == td);
    CHECK(gdd_to_pbd(back) == pbd);
  }
}

TEST_CASE("PBD(Z7) and breaking its 7-blocks into Fano planes") {
  Pbd const z7 = pbd_z7();
  CHECK(z7.size() == 21);
  CHECK(count_of_size(z7, 7) == 3);
  CHECK(count_of_size(z7, 3) == 49);

  Pbd const s = sts21();
  CHECK(s.uniform_block_size() == 3U);
  CHECK(s.blocks().size() == 21 * 20 / 6);
  CHECK(pairs_once(s));

  // Breaking a single block by hand gives a PBD with one 7-block fewer.
  Block const              big = z7.blocks()[static_cast<std::size_t>(
      std::find_if(z7.blocks().begin(), z7.blocks().end(), [](Block const& b) { return b.size() == 7; })
      - z7.blocks().begin())];
  Pbd const                once = break_block(z7, big, projective_space(2, 2), big);
  CHECK(count_of_size(once, 7) == 2);
  CHECK(pairs_once(once));

  std::vector<Point> const short_embedding(big.begin(), big.begin() + 6);
  CHECK(thrown_code([&] { break_block(z7, big, projective_space(2, 2), short_embedding); }) == Errc::size_mismatch);
  Block const not_a_block{0, 1, 2, 3, 4, 5, 7};
  CHECK(thrown_code([&] { break_block(z7, not_a_block, projective_space(2, 2), not_a_block); }) == Errc::result_not_pbd);
  Block const triple = z7.blocks()[0].size() == 3 ? z7.blocks()[0] : z7.blocks().back();
  CHECK(thrown_code([&] { break_block(z7, triple, trivial_pbd(3), triple); }) == Errc::degenerate_case);
}

TEST_CASE("Wilson's STS(19)") {
  Pbd const s = wilson_sts19(LatinSquare::cyclic(6));
  CHECK(s.size() == 19);
  CHECK(s.uniform_block_size() == 3U);
  CHECK(s.blocks().size() == 57);
  CHECK(pairs_once(s));
  for (Point p = 0; p < 19; ++p) {
    CHECK(s.blocks_through(p).size() == 9);
  }
}

TEST_CASE("cyclic Steiner triple systems") {
  Pbd const f = cyclic_sts(7, {{0, 1, 3}});
  CHECK(f.blocks().size() == 7);
  for (Point p = 0; p < 7; ++p) {
    CHECK(f.blocks_through(p).size() == 3);
  }
  Pbd const s13 = cyclic_sts(13, {{0, 1, 4}, {0, 2, 7}});
  CHECK(s13.blocks().size() == 26);
  CHECK(pairs_once(s13));
  CHECK(sts13() == s13);
  CHECK(thrown_code([] { cyclic_sts(9, {{0, 1, 3}}); }) == Errc::result_not_pbd);
}

TEST_CASE("necessary conditions and the subsystem bound") {
  std::vector<std::size_t> const k3{3};
  std::vector<std::size_t> const k37{3, 7};
  CHECK(necessary_conditions(k3, 7));
  CHECK_FALSE(necessary_conditions(k3, 8));
  CHECK(necessary_conditions(k37, 21));
  // STS exist exactly for v = 1, 3 mod 6.
  for (std::size_t v = 3; v < 40; ++v) {
    CHECK(necessary_conditions(k3, v) == (v % 6 == 1 || v % 6 == 3));
  }

  CHECK_FALSE(subsystem_bound_check(sts13(), 7));
  CHECK(subsystem_bound_check(projective_space(3, 2), 7));
  CHECK(subsystem_bound_check(projective_space(2, 3), 4));
  CHECK(thrown_code([] { subsystem_bound_check(hall_plane6(), 3); }) == Errc::not_uniform);
}

TEST_CASE("every catalog design covers each pair once") {
  for (auto const& [name, x] : erection_catalog()) {
    INFO(name);
    CHECK(pairs_once(x));
  }
}

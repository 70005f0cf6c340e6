#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "wilson/catalog.hpp"
#include "wilson/complex.hpp"

using namespace wilson;

namespace {

  Subset s_of(std::initializer_list<Point> pts) {
    return to_subset(std::vector<Point>(pts));
  }

  Subset clique(std::initializer_list<Point> vertices) {
    std::vector<Point> vs(vertices);
    Subset             s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        s |= bit(k5_edge(vs[i], vs[j]));
      }
    }
    return s;
  }

  std::set<Subset> as_set(MooreFamily const& f) {
    return {f.members().begin(), f.members().end()};
  }

  std::vector<Subset> all_subsets_upto(std::size_t v, std::size_t k) {
    std::vector<Subset> out;
    for (Subset s = 0; s < (Subset{1} << v); ++s) {
      if (cardinality(s) <= k) {
        out.push_back(s);
      }
    }
    return out;
  }

  SimplicialComplex desargues() {
    return truncate(graphic_matroid_k5(), 3);
  }

  Subset triangle_t() {
    return bit(k5_edge(2, 3)) | bit(k5_edge(2, 4)) | bit(k5_edge(3, 4));
  }

}  // namespace

TEST_CASE("rank, purity and the matroid test on small complexes") {
  SimplicialComplex const empty(4, {});
  CHECK(rank(empty) == 0);
  CHECK(is_pure(empty));
  CHECK(is_boolean_representable(SimplicialComplex(3, all_subsets_upto(3, 1))));

  SimplicialComplex const u35(5, all_subsets_upto(5, 3));
  CHECK(rank(u35) == 3);
  CHECK(is_matroid(u35));

  SimplicialComplex const fano = matroid_from_pbd(projective_space(2, 2));
  CHECK(rank(fano) == 3);
  CHECK(is_matroid(fano));
  CHECK(fano.facets().size() == 28);

  // Two facets of different sizes.
  SimplicialComplex const mixed(4, {s_of({0, 1, 2}), s_of({2, 3})});
  CHECK_FALSE(is_pure(mixed));
  CHECK_FALSE(is_matroid(mixed));
  CHECK(truncate(mixed, 2).facets().size() == 4);
  CHECK(rank(truncate(u35, 2)) == 2);
  CHECK(truncate(u35, 3) == u35);
}

TEST_CASE("matroids of PBDs and the round trip") {
  SimplicialComplex const np = matroid_from_pbd(near_pencil(3));
  CHECK_FALSE(np.contains(s_of({1, 2, 3})));
  CHECK(np.contains(s_of({0, 1, 2})));
  CHECK(np.contains(s_of({0, 2, 3})));

  CHECK(matroid_from_pbd(complete_graph(5)) == SimplicialComplex(5, all_subsets_upto(5, 3)));
  CHECK(pbd_from_matroid(SimplicialComplex(6, all_subsets_upto(6, 3))) == complete_graph(6));

  for (auto const& [name, x] : erection_catalog()) {
    INFO(name);
    SimplicialComplex const m = matroid_from_pbd(x);
    CHECK(pbd_from_matroid(m) == x);
    CHECK(rank(m) == 3);
  }

  CHECK(thrown_code([] { pbd_from_matroid(SimplicialComplex(4, all_subsets_upto(4, 2))); })
        == Errc::not_simple_rank3_matroid);
}

TEST_CASE("the Desargues PBD from the truncated graphic matroid of K5") {
  SimplicialComplex const k5 = graphic_matroid_k5();
  CHECK(rank(k5) == 4);
  CHECK(k5.facets().size() == 125);
  CHECK(is_matroid(k5));

  SimplicialComplex const d = desargues();
  CHECK(is_matroid(d));
  Pbd const dp = pbd_from_matroid(d);
  CHECK(dp.size() == 10);
  // Ten triangles and fifteen pairs of disjoint edges.
  std::size_t triples = 0;
  std::size_t pairs   = 0;
  for (auto const& b : dp.blocks()) {
    triples += b.size() == 3;
    pairs += b.size() == 2;
  }
  CHECK(triples == 10);
  CHECK(pairs == 15);
}

TEST_CASE("flats and closure") {
  Pbd const               np = near_pencil(4);
  MooreFamily const       lf = flats(matroid_from_pbd(np));
  std::set<Subset>        expected{0, full_set(5)};
  for (Point p = 0; p < 5; ++p) {
    expected.insert(bit(p));
  }
  for (std::size_t i = 0; i < np.blocks().size(); ++i) {
    expected.insert(np.block_set(i));
  }
  CHECK(as_set(lf) == expected);

  std::set<Subset> uniform{0, full_set(5)};
  for (Point p = 0; p < 5; ++p) {
    uniform.insert(bit(p));
    for (Point q = p + 1; q < 5; ++q) {
      uniform.insert(bit(p) | bit(q));
    }
  }
  CHECK(as_set(flats(SimplicialComplex(5, all_subsets_upto(5, 3)))) == uniform);

  Pbd const         fano = projective_space(2, 2);
  MooreFamily const ff   = flats(matroid_from_pbd(fano));
  CHECK(closure(ff, 0) == 0);
  for (Point p = 0; p < 7; ++p) {
    for (Point q = p + 1; q < 7; ++q) {
      CHECK(closure(ff, bit(p) | bit(q)) == to_subset(fano.line(p, q)));
    }
  }
}

TEST_CASE("closure axioms on every catalog lattice of flats") {
  for (auto const& [name, x] : erection_catalog()) {
    if (x.size() > 12) {
      continue;
    }
    INFO(name);
    MooreFamily const f = flats(matroid_from_pbd(x));
    std::size_t const v = x.size();
    for (Subset a = 0; a < (Subset{1} << v); a += 7) {
      Subset const c = closure(f, a);
      CHECK(is_subset(a, c));
      CHECK(closure(f, c) == c);
      for (Point p = 0; p < v; ++p) {
        CHECK(is_subset(c, closure(f, a | bit(p))));
      }
    }
  }
}

TEST_CASE("transversals recover the independent sets of a matroid") {
  SimplicialComplex const fano = matroid_from_pbd(projective_space(2, 2));
  CHECK(transversals(flats(fano), 3) == fano);
  CHECK(is_boolean_representable(fano));
  CHECK(is_boolean_representable(SimplicialComplex(4, all_subsets_upto(4, 2))));
  for (auto const& [name, x] : erection_catalog()) {
    if (x.size() > 10) {
      continue;
    }
    INFO(name);
    CHECK(is_boolean_representable(matroid_from_pbd(x)));
  }
}

TEST_CASE("epsilon of complete graphs, near pencils and Hall's design") {
  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK(epsilon(matroid_from_pbd(complete_graph(n))).members().size() == (std::size_t{1} << n));
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    SimplicialComplex const m = matroid_from_pbd(near_pencil(n));
    CHECK(epsilon(m) == flats(m));
  }

  Pbd const         h   = hall_plane6();
  MooreFamily const eps = epsilon(matroid_from_pbd(h));
  std::set<Subset>  expected{0, full_set(6), s_of({1, 3, 5})};
  for (Point p = 0; p < 6; ++p) {
    expected.insert(bit(p));
  }
  for (std::size_t i = 0; i < h.blocks().size(); ++i) {
    expected.insert(h.block_set(i));
  }
  CHECK(as_set(eps) == expected);
}

TEST_CASE("Hall's complex is not pure and not a matroid") {
  MooreFamily const       eps = epsilon(matroid_from_pbd(hall_plane6()));
  SimplicialComplex const b   = transversals(eps, 6);
  CHECK(rank(b) == 4);
  std::vector<Subset> const& facets = b.facets();
  // {1,3,6} and {1,2,4,6} in the paper's labels.
  CHECK(std::find(facets.begin(), facets.end(), s_of({0, 2, 5})) != facets.end());
  CHECK(std::find(facets.begin(), facets.end(), s_of({0, 1, 3, 5})) != facets.end());
  CHECK_FALSE(is_pure(b));
  CHECK_FALSE(is_matroid(b));
}

TEST_CASE("epsilon contains the flats and is intersection closed") {
  for (auto const& [name, x] : erection_catalog()) {
    if (x.size() > 15) {
      continue;
    }
    INFO(name);
    SimplicialComplex const m   = matroid_from_pbd(x);
    MooreFamily const       eps = epsilon(m);
    for (MooreFamily const fam = flats(m); Subset f : fam.members()) {
      CHECK(eps.contains(f));
    }
    for (Subset a : eps.members()) {
      for (Subset b : eps.members()) {
        CHECK(eps.contains(a & b));
      }
    }
  }
}

TEST_CASE("truncating the erected complex gives back the matroid") {
  for (auto const& [name, x] : erection_catalog()) {
    if (x.size() > 10) {
      continue;
    }
    INFO(name);
    SimplicialComplex const m  = matroid_from_pbd(x);
    MooreFamily const       eps = epsilon(m);
    LatticeView const       lattice(eps);
    CHECK(truncate(transversals(eps, lattice.height()), 3) == m);
  }
}

TEST_CASE("subsystems agree with a brute-force scan and with epsilon") {
  for (auto const& [name, x] : erection_catalog()) {
    INFO(name);
    MooreFamily const subs = subsystems(x);
    if (x.size() <= 16) {
      CHECK(as_set(subs) == oracle::subsystems(x.size(), x.blocks()));
    }
    if (x.size() <= 15) {
      CHECK(epsilon(matroid_from_pbd(x)) == subs);
    }
  }
  CHECK(subsystems(projective_space(2, 2)).members().size() == 16);
  CHECK(subsystems(affine_space(2, 3)).members().size() == 23);
  CHECK(subsystems(projective_space(3, 2)).members().size() == 1 + 15 + 35 + 15 + 1);

  std::size_t sevens = 0;
  for (MooreFamily const fam = subsystems(sts21()); Subset s : fam.members()) {
    sevens += cardinality(s) == 7;
  }
  CHECK(sevens == 3);
}

TEST_CASE("subsystem-free designs") {
  CHECK(is_subsystem_free(projective_space(2, 2)));
  CHECK(is_subsystem_free(pbd_z7()));
  CHECK(is_subsystem_free(sts13()));
  CHECK_FALSE(is_subsystem_free(wilson_sts19(LatinSquare::cyclic(6))));
  CHECK_FALSE(is_subsystem_free(hall_plane6()));
  Pbd const fano = projective_space(2, 2);
  CHECK(is_subsystem(fano, to_subset(fano.line(0, 1))));
  CHECK_FALSE(is_subsystem(fano, bit(0) | bit(1)));
  CHECK(subsystem_closure(hall_plane6(), s_of({1, 3})) == s_of({1, 3}));
  CHECK(subsystem_closure(hall_plane6(), s_of({1, 2})) == s_of({0, 1, 2}));
  CHECK(subsystem_closure(hall_plane6(), s_of({0, 3, 5})) == full_set(6));
}

TEST_CASE("epsilon of Desargues is the partition lattice") {
  MooreFamily const eps = epsilon(desargues());
  CHECK(eps.members().size() == 52);
  CHECK(as_set(eps) == oracle::k5_partition_flats());
  LatticeView const lattice(eps);
  CHECK(is_graded_lattice(lattice));
}

TEST_CASE("non-Desargues: relaxation, flats and the ungraded erection") {
  SimplicialComplex const d = desargues();
  Subset const            t = triangle_t();
  SimplicialComplex const n = relax(d, t);
  CHECK(n.contains(t));
  CHECK(is_matroid(n));
  CHECK(thrown_code([&] { relax(d, bit(0) | bit(1)); }) == Errc::not_circuit_hyperplane);

  // L(N) = P2(T) plus L(D) without T.
  std::set<Subset> expected = as_set(flats(d));
  expected.erase(t);
  for (Point a = 0; a < 10; ++a) {
    for (Point b = a + 1; b < 10; ++b) {
      if (contains(t, a) && contains(t, b)) {
        expected.insert(bit(a) | bit(b));
      }
    }
  }
  CHECK(as_set(flats(n)) == expected);

  MooreFamily const eps = epsilon(n);
  LatticeView const lattice(eps);
  CHECK_FALSE(is_graded_lattice(lattice));

  std::vector<Subset> const short_chain{0, clique({0, 1}), clique({0, 1, 2}), clique({0, 1, 2, 3}), full_set(10)};
  std::vector<Subset> const long_chain{0,
                                       clique({2, 3}),
                                       bit(k5_edge(2, 3)) | bit(k5_edge(3, 4)),
                                       clique({2, 3, 4}),
                                       clique({0, 1}) | clique({2, 3, 4}),
                                       full_set(10)};
  CHECK(is_maximal_chain(lattice, short_chain));
  CHECK(is_maximal_chain(lattice, long_chain));
  CHECK(lattice.min_chain_length() <= 4);
  CHECK(lattice.height() >= 5);

  // Components of each member are cliques or a pair of edges of T.
  for (Subset m : eps.members()) {
    for (Point e = 0; e < 10; ++e) {
      for (Point f = e + 1; f < 10; ++f) {
        if (!contains(m, e) || !contains(m, f)) {
          continue;
        }
        // Two member edges sharing a vertex: the third side of their
        // triangle is in, unless both edges lie in T.
        std::set<Point> ends;
        for (Point a = 0; a < 5; ++a) {
          for (Point b = a + 1; b < 5; ++b) {
            if (k5_edge(a, b) == e || k5_edge(a, b) == f) {
              ends.insert(a);
              ends.insert(b);
            }
          }
        }
        if (ends.size() == 3) {
          std::vector<Point> tri(ends.begin(), ends.end());
          Subset const       third = clique({tri[0], tri[1], tri[2]}) & ~(bit(e) | bit(f));
          bool const         in_t  = contains(t, e) && contains(t, f);
          CHECK((is_subset(third, m) || (in_t && !is_subset(t, m))));
        }
      }
    }
  }
}

TEST_CASE("Moore families reject bad input and lattices of flats are graded") {
  CHECK(thrown_code([] { MooreFamily(3, {0, s_of({0, 1}), s_of({1, 2})}); }) == Errc::invariant_violation);
  CHECK(thrown_code([] { MooreFamily(3, {0, s_of({0, 1}), s_of({1, 2}), full_set(3)}); })
        == Errc::invariant_violation);
  LatticeView const two(MooreFamily(3, {0, full_set(3)}));
  CHECK(is_graded_lattice(two));
  for (auto const& [name, x] : erection_catalog()) {
    INFO(name);
    CHECK(is_graded_lattice(LatticeView(flats(matroid_from_pbd(x)))));
  }
}

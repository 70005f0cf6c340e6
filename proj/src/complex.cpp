#include "wilson/complex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "wilson/error.hpp"

namespace wilson {

  namespace {

    constexpr std::size_t max_face_enumeration = 8'000'000;
    constexpr std::size_t max_scan_points      = 22;
    // Pairwise intersection checks are skipped above this family size.
    constexpr std::size_t max_checked_family = 5000;

    void sort_canonical(std::vector<Subset>& sets) {
      std::sort(sets.begin(), sets.end(), canonical_less);
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    }

    // Calls visit on every subset of `set` with at most k members.
    template <typename Visit>
    void for_each_small_subset(Subset set, std::size_t k, Visit&& visit) {
      auto const pts = members(set);
      Subset     current = 0;
      auto       rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        visit(current);
        if (depth == k) {
          return;
        }
        for (std::size_t i = start; i < pts.size(); ++i) {
          current |= bit(pts[i]);
          self(self, i + 1, depth + 1);
          current &= ~bit(pts[i]);
        }
      };
      rec(rec, 0, 0);
    }

    // For each point p, the inclusion-minimal faces Y with |Y| <= max_face,
    // p outside Y and Y + p not a face. A set X passes the flat-style test
    // iff no such Y lies inside X with p outside X.
    std::vector<std::vector<Subset>> obstructions(SimplicialComplex const& s, std::size_t max_face) {
      std::vector<std::vector<Subset>> by_point(s.size());
      auto const                       small = s.faces(max_face);
      std::unordered_set<Subset>       face_set;
      for (Subset f : s.faces(max_face + 1)) {
        face_set.insert(f);
      }
      for (Subset y : small) {  // canonical order: smaller faces first
        for (Point p = 0; p < s.size(); ++p) {
          if (contains(y, p) || face_set.contains(y | bit(p))) {
            continue;
          }
          auto& list = by_point[p];
          bool  dominated = std::any_of(list.begin(), list.end(), [&](Subset z) { return is_subset(z, y); });
          if (!dominated) {
            list.push_back(y);
          }
        }
      }
      return by_point;
    }

    Subset obstruction_closure(std::vector<std::vector<Subset>> const& obs, Subset x) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (Point p = 0; p < obs.size(); ++p) {
          if (contains(x, p)) {
            continue;
          }
          for (Subset y : obs[p]) {
            if (is_subset(y, x)) {
              x |= bit(p);
              changed = true;
              break;
            }
          }
        }
      }
      return x;
    }

    // All sets reachable from close(empty) by adding a point and closing.
    template <typename Close>
    std::vector<Subset> closed_sets(std::size_t v, Close&& close) {
      std::vector<Subset>        out{close(Subset{0})};
      std::unordered_set<Subset> seen(out.begin(), out.end());
      for (std::size_t i = 0; i < out.size(); ++i) {
        Subset const f = out[i];
        for (Point p = 0; p < v; ++p) {
          if (contains(f, p)) {
            continue;
          }
          Subset const g = close(f | bit(p));
          if (seen.insert(g).second) {
            out.push_back(g);
          }
        }
      }
      return out;
    }

    std::size_t face_rank(SimplicialComplex const& s, Subset x) {
      std::size_t r = 0;
      for (Subset f : s.facets()) {
        r = std::max(r, cardinality(f & x));
      }
      return r;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SimplicialComplex, MooreFamily, LatticeView
  ////////////////////////////////////////////////////////////////////////

  SimplicialComplex::SimplicialComplex(std::size_t v, std::vector<Subset> generators) : _v(v) {
    require_subset_capacity(v, "SimplicialComplex");
    Subset const all = full_set(v);
    for (Subset g : generators) {
      if (!is_subset(g, all)) {
        throw Error(Errc::point_out_of_range, "face " + format_subset(g) + " outside the point set");
      }
    }
    std::sort(generators.begin(), generators.end(),
              [](Subset a, Subset b) { return cardinality(a) > cardinality(b); });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (Subset g : generators) {
      bool covered = std::any_of(_facets.begin(), _facets.end(), [&](Subset f) { return is_subset(g, f); });
      if (!covered) {
        _facets.push_back(g);
      }
    }
    if (_facets.empty()) {
      _facets.push_back(0);
    }
    sort_canonical(_facets);
  }

  bool SimplicialComplex::contains(Subset face) const {
    return std::any_of(_facets.begin(), _facets.end(), [&](Subset f) { return is_subset(face, f); });
  }

  std::vector<Subset> SimplicialComplex::faces(std::size_t max_size) const {
    std::unordered_set<Subset> seen;
    for (Subset f : _facets) {
      for_each_small_subset(f, max_size, [&](Subset x) {
        seen.insert(x);
        if (seen.size() > max_face_enumeration) {
          throw Error(Errc::too_large, "complex has too many faces to enumerate");
        }
      });
    }
    std::vector<Subset> out(seen.begin(), seen.end());
    sort_canonical(out);
    return out;
  }

  MooreFamily::MooreFamily(std::size_t v, std::vector<Subset> members) : _v(v), _members(std::move(members)) {
    require_subset_capacity(v, "MooreFamily");
    Subset const all = full_set(v);
    sort_canonical(_members);
    if (_members.empty() || _members.back() != all) {
      throw Error(Errc::invariant_violation, "Moore family must contain the whole point set");
    }
    for (Subset m : _members) {
      if (!is_subset(m, all)) {
        throw Error(Errc::point_out_of_range, "member " + format_subset(m) + " outside the point set");
      }
    }
    if (_members.size() <= max_checked_family) {
      std::unordered_set<Subset> set(_members.begin(), _members.end());
      for (std::size_t i = 0; i < _members.size(); ++i) {
        for (std::size_t j = i + 1; j < _members.size(); ++j) {
          if (!set.contains(_members[i] & _members[j])) {
            throw Error(Errc::invariant_violation, "family is not closed under intersection: "
                                                       + format_subset(_members[i]) + " and "
                                                       + format_subset(_members[j]));
          }
        }
      }
    }
  }

  bool MooreFamily::contains(Subset x) const {
    return std::binary_search(_members.begin(), _members.end(), x, canonical_less);
  }

  LatticeView::LatticeView(MooreFamily family) : _family(std::move(family)) {
    auto const& m = _family.members();
    std::size_t n = m.size();
    _up.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      // Minimal strict supersets; canonical order puts smaller sets first.
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m[j] == m[i] || !is_subset(m[i], m[j])) {
          continue;
        }
        bool minimal = std::none_of(_up[i].begin(), _up[i].end(), [&](std::size_t k) { return is_subset(m[k], m[j]); });
        if (minimal) {
          _up[i].push_back(j);
        }
      }
    }
    std::vector<std::size_t> lo(n, SIZE_MAX);
    std::vector<std::size_t> hi(n, 0);
    lo[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lo[i] == SIZE_MAX) {
        continue;
      }
      for (std::size_t j : _up[i]) {
        lo[j] = std::min(lo[j], lo[i] + 1);
        hi[j] = std::max(hi[j], hi[i] + 1);
      }
    }
    _min_len = lo[n - 1];
    _max_len = hi[n - 1];
  }

  bool LatticeView::covers(Subset upper, Subset lower) const {
    auto const& m  = _family.members();
    auto        lo = std::lower_bound(m.begin(), m.end(), lower, canonical_less);
    auto        up = std::lower_bound(m.begin(), m.end(), upper, canonical_less);
    if (lo == m.end() || *lo != lower || up == m.end() || *up != upper) {
      return false;
    }
    auto const& list = _up[static_cast<std::size_t>(lo - m.begin())];
    return std::find(list.begin(), list.end(), static_cast<std::size_t>(up - m.begin())) != list.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Complex operations
  ////////////////////////////////////////////////////////////////////////

  std::size_t rank(SimplicialComplex const& s) {
    std::size_t r = 0;
    for (Subset f : s.facets()) {
      r = std::max(r, cardinality(f));
    }
    return r;
  }

  bool is_pure(SimplicialComplex const& s) {
    auto const r = rank(s);
    return std::all_of(s.facets().begin(), s.facets().end(), [&](Subset f) { return cardinality(f) == r; });
  }

  bool is_matroid(SimplicialComplex const& s) {
    auto const                       r = rank(s);
    auto const                       all = s.faces(r);
    std::unordered_set<Subset>       set(all.begin(), all.end());
    std::vector<std::vector<Subset>> by_size(r + 1);
    for (Subset f : all) {
      by_size[cardinality(f)].push_back(f);
    }
    for (std::size_t k = 0; k < r; ++k) {
      for (Subset big : by_size[k + 1]) {
        for (Subset small : by_size[k]) {
          bool   ok = false;
          Subset diff = big & ~small;
          for_each_point(diff, [&](Point p) { ok = ok || set.contains(small | bit(p)); });
          if (!ok) {
            return false;
          }
        }
      }
    }
    return true;
  }

  SimplicialComplex matroid_from_pbd(Pbd const& x) {
    require_subset_capacity(x.size(), "matroid_from_pbd");
    auto const          v = static_cast<Point>(x.size());
    std::vector<Subset> gens;
    for (Point a = 0; a < v; ++a) {
      for (Point b = a + 1; b < v; ++b) {
        gens.push_back(bit(a) | bit(b));
        for (Point c = b + 1; c < v; ++c) {
          if (x.line_index(a, b) != x.line_index(a, c)) {
            gens.push_back(bit(a) | bit(b) | bit(c));
          }
        }
      }
    }
    return SimplicialComplex(v, std::move(gens));
  }

  Pbd pbd_from_matroid(SimplicialComplex const& m) {
    auto const v = static_cast<Point>(m.size());
    if (rank(m) != 3 || !is_matroid(m)) {
      throw Error(Errc::not_simple_rank3_matroid, "complex is not a rank 3 matroid");
    }
    for (Point a = 0; a < v; ++a) {
      for (Point b = a + 1; b < v; ++b) {
        if (!m.contains(bit(a) | bit(b))) {
          throw Error(Errc::not_simple_rank3_matroid, "pair (" + std::to_string(a) + "," + std::to_string(b)
                                                          + ") is dependent",
                      {a, b});
        }
      }
    }
    std::set<Block> blocks;
    for (Point a = 0; a < v; ++a) {
      for (Point b = a + 1; b < v; ++b) {
        Block line{a, b};
        for (Point u = 0; u < v; ++u) {
          if (u != a && u != b && !m.contains(bit(a) | bit(b) | bit(u))) {
            line.push_back(u);
          }
        }
        std::sort(line.begin(), line.end());
        blocks.insert(std::move(line));
      }
    }
    return validate_pbd(v, std::vector<Block>(blocks.begin(), blocks.end()));
  }

  MooreFamily flats(SimplicialComplex const& s) {
    auto const obs = obstructions(s, rank(s));
    auto       out = closed_sets(s.size(), [&](Subset x) { return obstruction_closure(obs, x); });
    return MooreFamily(s.size(), std::move(out));
  }

  Subset closure(MooreFamily const& f, Subset x) {
    Subset result = full_set(f.size());
    for (Subset m : f.members()) {
      if (is_subset(x, m)) {
        result &= m;
      }
    }
    return result;
  }

  SimplicialComplex transversals(MooreFamily const& f, std::size_t max_size) {
    auto const          v = f.size();
    std::vector<Subset> level{0};
    std::vector<Subset> all{0};
    for (std::size_t k = 0; k < max_size && !level.empty(); ++k) {
      std::unordered_set<Subset> next;
      for (Subset s : level) {
        Subset const free = full_set(v) & ~closure(f, s);
        for_each_point(free, [&](Point p) { next.insert(s | bit(p)); });
      }
      level.assign(next.begin(), next.end());
      all.insert(all.end(), level.begin(), level.end());
    }
    return SimplicialComplex(v, std::move(all));
  }

  bool is_boolean_representable(SimplicialComplex const& s) {
    return transversals(flats(s), rank(s) + 1) == s;
  }

  SimplicialComplex truncate(SimplicialComplex const& s, std::size_t k) {
    std::vector<Subset> gens;
    for (Subset f : s.facets()) {
      if (cardinality(f) <= k) {
        gens.push_back(f);
      } else {
        for_each_small_subset(f, k, [&](Subset x) {
          if (cardinality(x) == k) {
            gens.push_back(x);
          }
        });
      }
    }
    return SimplicialComplex(s.size(), std::move(gens));
  }

  MooreFamily epsilon(SimplicialComplex const& s) {
    auto const v = s.size();
    if (v > max_scan_points) {
      throw Error(Errc::too_large, "epsilon scans all subsets and supports at most 22 points");
    }
    auto const r = rank(s);
    struct Obstruction {
      Subset face;
      Subset point;
    };
    std::vector<Obstruction> flat;
    if (r > 0) {
      auto const obs = obstructions(s, r - 1);
      for (Point p = 0; p < v; ++p) {
        for (Subset y : obs[p]) {
          flat.push_back({y, bit(p)});
        }
      }
    }
    std::sort(flat.begin(), flat.end(),
              [](Obstruction const& a, Obstruction const& b) { return cardinality(a.face) < cardinality(b.face); });
    std::vector<Subset> out;
    Subset const        end = Subset{1} << v;
    for (Subset x = 0; x < end; ++x) {
      bool ok = true;
      for (auto const& o : flat) {
        if ((o.face & ~x) == 0 && (o.point & x) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(x);
      }
    }
    return MooreFamily(v, std::move(out));
  }

  bool is_subsystem(Pbd const& x, Subset s) {
    for (std::size_t i = 0; i < x.blocks().size(); ++i) {
      Subset const b = x.block_set(i);
      if (cardinality(b & s) >= 2 && !is_subset(b, s)) {
        return false;
      }
    }
    return true;
  }

  Subset subsystem_closure(Pbd const& x, Subset s) {
    require_subset_capacity(x.size(), "subsystem_closure");
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < x.blocks().size(); ++i) {
        Subset const b = x.block_set(i);
        if (cardinality(b & s) >= 2 && !is_subset(b, s)) {
          s |= b;
          changed = true;
        }
      }
    }
    return s;
  }

  MooreFamily subsystems(Pbd const& x) {
    require_subset_capacity(x.size(), "subsystems");
    auto out = closed_sets(x.size(), [&](Subset s) { return subsystem_closure(x, s); });
    return MooreFamily(x.size(), std::move(out));
  }

  bool is_subsystem_free(Pbd const& x) {
    std::set<Subset> trivial{0, full_set(x.size())};
    for (Point p = 0; p < x.size(); ++p) {
      trivial.insert(bit(p));
    }
    for (std::size_t i = 0; i < x.blocks().size(); ++i) {
      trivial.insert(x.block_set(i));
    }
    return subsystems(x).members().size() == trivial.size();
  }

  Point k5_edge(Point a, Point b) {
    if (a > b) {
      std::swap(a, b);
    }
    if (a == b || b >= 5) {
      throw Error(Errc::bad_params, "not an edge of K5");
    }
    // Edges before row a: 4 + 3 + ... ; then offset within the row.
    static constexpr std::array<Point, 5> row_start{0, 4, 7, 9, 10};
    return row_start[a] + (b - a - 1);
  }

  SimplicialComplex graphic_matroid_k5() {
    std::vector<std::pair<Point, Point>> edges;
    for (Point a = 0; a < 5; ++a) {
      for (Point b = a + 1; b < 5; ++b) {
        edges.emplace_back(a, b);
      }
    }
    std::vector<Subset> trees;
    for (Subset s = 0; s < (Subset{1} << 10); ++s) {
      if (cardinality(s) != 4) {
        continue;
      }
      std::array<Point, 5> parent{0, 1, 2, 3, 4};
      auto                 find = [&](Point p) {
        while (parent[p] != p) {
          p = parent[p];
        }
        return p;
      };
      bool acyclic = true;
      for_each_point(s, [&](Point e) {
        Point const ra = find(edges[e].first);
        Point const rb = find(edges[e].second);
        if (ra == rb) {
          acyclic = false;
        } else {
          parent[ra] = rb;
        }
      });
      if (acyclic) {
        trees.push_back(s);
      }
    }
    return SimplicialComplex(10, std::move(trees));
  }

  SimplicialComplex relax(SimplicialComplex const& m, Subset x) {
    if (m.contains(x)) {
      throw Error(Errc::not_circuit_hyperplane, format_subset(x) + " is independent");
    }
    bool minimal = true;
    for_each_point(x, [&](Point p) { minimal = minimal && m.contains(x & ~bit(p)); });
    if (!minimal) {
      throw Error(Errc::not_circuit_hyperplane, format_subset(x) + " is not a circuit");
    }
    if (!flats(m).contains(x) || face_rank(m, x) + 1 != rank(m)) {
      throw Error(Errc::not_circuit_hyperplane, format_subset(x) + " is not a hyperplane");
    }
    auto gens = m.facets();
    gens.push_back(x);
    return SimplicialComplex(m.size(), std::move(gens));
  }

  bool is_graded_lattice(LatticeView const& lattice) {
    return lattice.min_chain_length() == lattice.height();
  }

  bool is_maximal_chain(LatticeView const& lattice, std::span<Subset const> chain) {
    auto const& m = lattice.family().members();
    if (chain.size() < 1 || chain.front() != m.front() || chain.back() != m.back()) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!lattice.covers(chain[i + 1], chain[i])) {
        return false;
      }
    }
    return true;
  }

}  // namespace wilson

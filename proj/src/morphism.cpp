#include "wilson/morphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wilson/error.hpp"

namespace wilson {

  ////////////////////////////////////////////////////////////////////////
  // PartialMap
  ////////////////////////////////////////////////////////////////////////

  PartialMap::PartialMap(std::size_t source, std::size_t target, std::vector<Point> table)
      : _target(target), _table(std::move(table)) {
    if (_table.size() != source) {
      throw Error(Errc::size_mismatch, "table length " + std::to_string(_table.size()) + " differs from source size "
                                           + std::to_string(source));
    }
    for (Point p : _table) {
      if (p != undefined && p >= target) {
        throw Error(Errc::point_out_of_range, "value " + std::to_string(p) + " outside the target", {p});
      }
    }
  }

  PartialMap PartialMap::identity(std::size_t n) {
    std::vector<Point> t(n);
    for (Point p = 0; p < n; ++p) {
      t[p] = p;
    }
    return PartialMap(n, n, std::move(t));
  }

  PartialMap PartialMap::empty(std::size_t source, std::size_t target) {
    return PartialMap(source, target, std::vector<Point>(source, undefined));
  }

  PartialMap PartialMap::constant(std::size_t source, std::size_t target, Subset domain, Point value) {
    std::vector<Point> t(source, undefined);
    for_each_point(domain, [&](Point p) { t.at(p) = value; });
    return PartialMap(source, target, std::move(t));
  }

  Subset PartialMap::domain() const {
    require_subset_capacity(_table.size(), "PartialMap::domain");
    Subset s = 0;
    for (Point p = 0; p < _table.size(); ++p) {
      if (_table[p] != undefined) {
        s |= bit(p);
      }
    }
    return s;
  }

  Subset PartialMap::co_domain() const {
    return full_set(_table.size()) & ~domain();
  }

  Subset PartialMap::image() const {
    require_subset_capacity(_target, "PartialMap::image");
    Subset s = 0;
    for (Point q : _table) {
      if (q != undefined) {
        s |= bit(q);
      }
    }
    return s;
  }

  Subset PartialMap::preimage(Subset s) const {
    Subset out = 0;
    for (Point p = 0; p < _table.size(); ++p) {
      if (_table[p] != undefined && contains(s, _table[p])) {
        out |= bit(p);
      }
    }
    return out;
  }

  Subset PartialMap::image_of(Subset s) const {
    Subset out = 0;
    for_each_point(s, [&](Point p) {
      if (_table[p] != undefined) {
        out |= bit(_table[p]);
      }
    });
    return out;
  }

  bool PartialMap::is_permutation() const {
    if (_table.size() != _target) {
      return false;
    }
    std::vector<bool> hit(_target, false);
    for (Point q : _table) {
      if (q == undefined || hit[q]) {
        return false;
      }
      hit[q] = true;
    }
    return true;
  }

  bool PartialMap::is_idempotent() const {
    if (_table.size() != _target) {
      return false;
    }
    for (Point q : _table) {
      if (q != undefined && _table[q] != q) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism tests
  ////////////////////////////////////////////////////////////////////////

  std::vector<Subset> open_sets(Pbd const& x) {
    Subset const        all = full_set(x.size());
    std::vector<Subset> out;
    for (MooreFamily const fam = subsystems(x); Subset s : fam.members()) {
      out.push_back(all & ~s);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  bool is_open(Pbd const& x, Subset s) {
    return is_subsystem(x, full_set(x.size()) & ~s);
  }

  Subset wilson_preimage(PartialMap const& f, Subset b) {
    return f.preimage(b) | f.co_domain();
  }

  namespace {

    void check_sizes(PartialMap const& f, Pbd const& x, Pbd const& y) {
      if (f.source_size() != x.size() || f.target_size() != y.size()) {
        throw Error(Errc::size_mismatch, "map sizes do not match the designs");
      }
    }

    bool sorted_contains(std::vector<Subset> const& sets, Subset s) {
      return std::binary_search(sets.begin(), sets.end(), s, canonical_less);
    }

  }  // namespace

  MorphismTester::MorphismTester(Pbd const& x, Pbd const& y) : _x_open(open_sets(x)), _y_open(open_sets(y)) {}

  bool MorphismTester::is_morphism(PartialMap const& f) const {
    if (!sorted_contains(_x_open, f.domain())) {
      return false;
    }
    return std::all_of(_y_open.begin(), _y_open.end(),
                       [&](Subset o) { return sorted_contains(_x_open, f.preimage(o)); });
  }

  bool is_morphism(PartialMap const& f, Pbd const& x, Pbd const& y) {
    check_sizes(f, x, y);
    return MorphismTester(x, y).is_morphism(f);
  }

  bool is_morphism_blockwise(PartialMap const& f, Pbd const& x, Pbd const& y) {
    check_sizes(f, x, y);
    if (!is_open(x, f.domain())) {
      return false;
    }
    for (std::size_t i = 0; i < x.blocks().size(); ++i) {
      Subset const b   = x.block_set(i);
      Subset const img = f.image_of(b);
      if (cardinality(img) <= 1) {
        continue;
      }
      if (!is_subset(b, f.domain()) || cardinality(img) != cardinality(b)) {
        return false;
      }
      auto const pts  = members(img);
      Subset     line = to_subset(y.line(pts[0], pts[1]));
      if (!is_subset(img, line)) {
        return false;
      }
    }
    return true;
  }

  bool is_open_morphism(PartialMap const& f, Pbd const& x, Pbd const& y) {
    if (!is_morphism(f, x, y)) {
      throw Error(Errc::not_a_morphism, "map is not a morphism");
    }
    bool by_blocks = true;
    for (std::size_t i = 0; i < x.blocks().size() && by_blocks; ++i) {
      Subset const img = f.image_of(x.block_set(i));
      if (cardinality(img) <= 1) {
        continue;
      }
      auto const pts = members(img);
      by_blocks      = to_subset(y.line(pts[0], pts[1])) == img;
    }
    bool by_subsystems = true;
    for (MooreFamily const fam = subsystems(x); Subset s : fam.members()) {
      if (!is_subsystem(y, f.image_of(s))) {
        by_subsystems = false;
        break;
      }
    }
    if (by_blocks != by_subsystems) {
      throw Error(Errc::invariant_violation, "block and subsystem tests of openness disagree");
    }
    return by_blocks;
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition, kernel, degree, fibres
  ////////////////////////////////////////////////////////////////////////

  PartialMap compose(PartialMap const& g, PartialMap const& f) {
    if (f.target_size() != g.source_size()) {
      throw Error(Errc::size_mismatch, "cannot compose: target of f differs from source of g");
    }
    std::vector<Point> t(f.source_size(), PartialMap::undefined);
    for (Point p = 0; p < t.size(); ++p) {
      if (f.is_defined(p)) {
        t[p] = g(f(p));
      }
    }
    return PartialMap(f.source_size(), g.target_size(), std::move(t));
  }

  Partition kernel(PartialMap const& f) {
    std::map<Point, std::vector<Point>> fibres;
    for (Point p = 0; p < f.source_size(); ++p) {
      if (f.is_defined(p)) {
        fibres[f(p)].push_back(p);
      }
    }
    Partition out;
    for (auto& [q, fibre] : fibres) {
      out.classes.push_back(std::move(fibre));
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
  }

  std::size_t degree(PartialMap const& f, Pbd const& x) {
    if (!x.uniform_block_size()) {
      throw Error(Errc::not_uniform, "degree needs a uniform design");
    }
    auto const k = kernel(f);
    if (k.classes.empty()) {
      throw Error(Errc::empty_image, "map has empty image");
    }
    std::size_t const d = k.classes.front().size();
    for (auto const& c : k.classes) {
      if (c.size() != d) {
        throw Error(Errc::non_uniform_fibers, "fibres have sizes " + std::to_string(d) + " and "
                                                   + std::to_string(c.size()));
      }
    }
    return d;
  }

  FiberGdd fiber_gdd(PartialMap const& f, Pbd const& x, Pbd const& y, Subset b) {
    check_sizes(f, x, y);
    Subset const z = f.preimage(b);
    if (z == 0) {
      throw Error(Errc::empty_fiber, "no point maps into " + format_subset(b));
    }
    FiberGdd           out;
    std::vector<Point> local(x.size(), PartialMap::undefined);
    for_each_point(z, [&](Point p) {
      local[p] = static_cast<Point>(out.points.size());
      out.points.push_back(p);
    });
    std::vector<Subset> fibre_sets;
    std::vector<Block>  groups;
    for_each_point(b & f.image(), [&](Point q) {
      Subset const fib = f.preimage(bit(q));
      fibre_sets.push_back(fib);
      Block g;
      for_each_point(fib, [&](Point p) { g.push_back(local[p]); });
      groups.push_back(std::move(g));
    });
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < x.blocks().size(); ++i) {
      Subset const blk = x.block_set(i);
      if (!is_subset(blk, z)) {
        continue;
      }
      bool transverse = std::all_of(fibre_sets.begin(), fibre_sets.end(),
                                    [&](Subset fib) { return cardinality(fib & blk) <= 1; });
      if (transverse) {
        Block c;
        for_each_point(blk, [&](Point p) { c.push_back(local[p]); });
        blocks.push_back(std::move(c));
      }
    }
    out.gdd = validate_gdd(out.points.size(), std::move(groups), std::move(blocks));
    return out;
  }

  PartialMap canonical_sts19_morphism(LatinSquare const& square) {
    Pbd const          source = wilson_sts19(square);
    std::vector<Point> t(source.size(), PartialMap::undefined);
    for (Point p = 0; p < 18; ++p) {
      t[p] = p / 6;
    }
    return PartialMap(19, 3, std::move(t));
  }

}  // namespace wilson

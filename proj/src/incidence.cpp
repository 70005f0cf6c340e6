#include "wilson/incidence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "wilson/error.hpp"
#include "wilson/galois_field.hpp"

namespace wilson {

  namespace {

    std::string pair_text(Point p, Point q) {
      return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }

    void normalise_blocks(std::vector<Block>& blocks) {
      for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
      }
      std::sort(blocks.begin(), blocks.end());
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Pbd
  ////////////////////////////////////////////////////////////////////////

  Subset Pbd::block_set(std::size_t i) const {
    require_subset_capacity(_v, "Pbd::block_set");
    return _block_sets[i];
  }

  bool Pbd::is_degenerate() const noexcept {
    return _blocks.size() == 1;
  }

  std::optional<std::size_t> Pbd::uniform_block_size() const {
    std::size_t const k = _blocks.front().size();
    for (auto const& b : _blocks) {
      if (b.size() != k) {
        return std::nullopt;
      }
    }
    return k;
  }

  Pbd validate_pbd(std::size_t v, std::vector<Block> blocks, bool allow_degenerate) {
    if (v <= 1) {
      throw Error(Errc::degenerate_case, "a PBD needs at least two points");
    }
    for (auto const& b : blocks) {
      for (Point p : b) {
        if (p >= v) {
          throw Error(Errc::point_out_of_range, "point " + std::to_string(p) + " outside 0.." + std::to_string(v - 1),
                      {p});
        }
      }
    }
    normalise_blocks(blocks);
    for (auto const& b : blocks) {
      if (b.size() < 2) {
        throw Error(Errc::block_too_small, "block with fewer than two points", b);
      }
      auto const dup = std::adjacent_find(b.begin(), b.end());
      if (dup != b.end()) {
        throw Error(Errc::pair_double_covered, "block repeats point " + std::to_string(*dup), {*dup, *dup});
      }
    }
    if (blocks.empty()) {
      throw Error(Errc::degenerate_case, "no block has two or more points");
    }
    if (blocks.size() == 1 && blocks.front().size() == v && !allow_degenerate) {
      throw Error(Errc::degenerate_case, "the only block is the whole point set");
    }

    Pbd x;
    x._v = v;
    x._line.assign(v * v, Pbd::no_block);
    for (std::uint32_t i = 0; i < blocks.size(); ++i) {
      auto const& b = blocks[i];
      for (std::size_t s = 0; s < b.size(); ++s) {
        for (std::size_t t = s + 1; t < b.size(); ++t) {
          auto& slot = x._line[b[s] * v + b[t]];
          if (slot != Pbd::no_block) {
            throw Error(Errc::pair_double_covered, "pair " + pair_text(b[s], b[t]) + " lies in two blocks",
                        {b[s], b[t]});
          }
          slot                     = i;
          x._line[b[t] * v + b[s]] = i;
        }
      }
    }
    for (Point p = 0; p < v; ++p) {
      for (Point q = p + 1; q < v; ++q) {
        if (x._line[p * v + q] == Pbd::no_block) {
          throw Error(Errc::pair_uncovered, "pair " + pair_text(p, q) + " lies in no block", {p, q});
        }
      }
    }
    x._through.assign(v, {});
    for (std::uint32_t i = 0; i < blocks.size(); ++i) {
      for (Point p : blocks[i]) {
        x._through[p].push_back(i);
      }
    }
    if (v <= max_subset_points) {
      for (auto const& b : blocks) {
        x._block_sets.push_back(to_subset(b));
      }
    }
    x._blocks = std::move(blocks);
    return x;
  }

  Pbd trivial_pbd(std::size_t v) {
    Block all(v);
    std::iota(all.begin(), all.end(), Point{0});
    return validate_pbd(v, {all}, true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Gdd and Latin squares
  ////////////////////////////////////////////////////////////////////////

  Gdd validate_gdd(std::size_t v, std::vector<Block> groups, std::vector<Block> blocks) {
    auto fail = [](std::string const& why, std::vector<Point> w = {}) {
      throw Error(Errc::gdd_axiom_violation, why, std::move(w));
    };
    normalise_blocks(groups);
    normalise_blocks(blocks);
    std::vector<int> group_of(v, -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].empty()) {
        fail("empty group");
      }
      for (Point p : groups[g]) {
        if (p >= v) {
          fail("group point out of range", {p});
        }
        if (group_of[p] != -1) {
          fail("point " + std::to_string(p) + " lies in two groups", {p});
        }
        group_of[p] = static_cast<int>(g);
      }
    }
    for (Point p = 0; p < v; ++p) {
      if (group_of[p] == -1) {
        fail("point " + std::to_string(p) + " lies in no group", {p});
      }
    }
    std::vector<std::uint8_t> covered(v * v, 0);
    for (auto const& b : blocks) {
      if (b.size() < 2) {
        fail("block with fewer than two points", b);
      }
      for (std::size_t s = 0; s < b.size(); ++s) {
        if (b[s] >= v) {
          fail("block point out of range", {b[s]});
        }
        for (std::size_t t = s + 1; t < b.size(); ++t) {
          Point const p = b[s];
          Point const q = b[t];
          if (p == q || group_of[p] == group_of[q]) {
            fail("pair " + pair_text(p, q) + " lies in a group and a block", {p, q});
          }
          if (covered[p * v + q] != 0) {
            fail("pair " + pair_text(p, q) + " lies in two blocks", {p, q});
          }
          covered[p * v + q] = 1;
        }
      }
    }
    for (Point p = 0; p < v; ++p) {
      for (Point q = p + 1; q < v; ++q) {
        if (group_of[p] != group_of[q] && covered[p * v + q] == 0) {
          fail("pair " + pair_text(p, q) + " lies in no group or block", {p, q});
        }
      }
    }
    return Gdd{v, std::move(groups), std::move(blocks)};
  }

  bool is_transversal_design(Gdd const& g, std::size_t k, std::size_t m) {
    if (g.groups.size() != k || g.v != k * m) {
      return false;
    }
    return std::all_of(g.groups.begin(), g.groups.end(), [&](Block const& grp) { return grp.size() == m; })
           && std::all_of(g.blocks.begin(), g.blocks.end(), [&](Block const& b) { return b.size() == k; });
  }

  LatinSquare::LatinSquare(std::size_t order, std::vector<Point> cells) : _order(order), _cells(std::move(cells)) {
    if (order == 0 || _cells.size() != order * order) {
      throw Error(Errc::not_latin_square, "expected " + std::to_string(order * order) + " cells");
    }
    for (std::size_t i = 0; i < order; ++i) {
      std::vector<bool> in_row(order, false);
      std::vector<bool> in_col(order, false);
      for (std::size_t j = 0; j < order; ++j) {
        Point const r = _cells[i * order + j];
        Point const c = _cells[j * order + i];
        if (r >= order || c >= order || in_row[r] || in_col[c]) {
          throw Error(Errc::not_latin_square, "row or column " + std::to_string(i) + " repeats a symbol");
        }
        in_row[r] = true;
        in_col[c] = true;
      }
    }
  }

  LatinSquare LatinSquare::cyclic(std::size_t order) {
    std::vector<Point> cells(order * order);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; j < order; ++j) {
        cells[i * order + j] = static_cast<Point>((i + j) % order);
      }
    }
    return LatinSquare(order, std::move(cells));
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  Pbd complete_graph(std::size_t n) {
    if (n < 3) {
      throw Error(Errc::bad_params, "complete_graph needs n >= 3");
    }
    std::vector<Block> blocks;
    for (Point p = 0; p < n; ++p) {
      for (Point q = p + 1; q < n; ++q) {
        blocks.push_back({p, q});
      }
    }
    return validate_pbd(n, std::move(blocks));
  }

  Pbd near_pencil(std::size_t n) {
    if (n < 3) {
      throw Error(Errc::bad_params, "near_pencil needs n >= 3");
    }
    Block line(n);
    std::iota(line.begin(), line.end(), Point{1});
    std::vector<Block> blocks{line};
    for (Point i = 1; i <= n; ++i) {
      blocks.push_back({0, i});
    }
    return validate_pbd(n + 1, std::move(blocks));
  }

  namespace {

    using Vec = std::vector<unsigned>;

    unsigned encode(Vec const& x, unsigned q) {
      unsigned code = 0;
      for (unsigned c : x) {
        code = code * q + c;
      }
      return code;
    }

    // Scale so the first nonzero coordinate is 1.
    Vec normalise(Vec x, GaloisField const& f) {
      for (unsigned c : x) {
        if (c != 0) {
          unsigned const s = f.inv(c);
          for (auto& y : x) {
            y = f.mul(y, s);
          }
          break;
        }
      }
      return x;
    }

    Pbd lines_to_pbd(std::size_t v, std::set<Block>&& lines) {
      return validate_pbd(v, std::vector<Block>(lines.begin(), lines.end()));
    }

  }  // namespace

  Pbd projective_space(unsigned n, unsigned q) {
    if (n < 2) {
      throw Error(Errc::bad_params, "projective_space needs n >= 2");
    }
    GaloisField const           f(q);
    unsigned const              dim = n + 1;
    std::vector<Vec>            points;
    std::map<unsigned, Point>   index;
    unsigned                    total = 1;
    for (unsigned i = 0; i < dim; ++i) {
      total *= q;
    }
    for (unsigned code = 1; code < total; ++code) {
      Vec      x(dim);
      unsigned c = code;
      for (unsigned i = dim; i-- > 0;) {
        x[i] = c % q;
        c /= q;
      }
      if (normalise(x, f) == x) {
        index[code] = static_cast<Point>(points.size());
        points.push_back(x);
      }
    }
    std::set<Block> lines;
    for (Point a = 0; a < points.size(); ++a) {
      for (Point b = a + 1; b < points.size(); ++b) {
        Block line{a};
        for (unsigned c = 0; c < q; ++c) {
          Vec y(dim);
          for (unsigned i = 0; i < dim; ++i) {
            y[i] = f.add(points[b][i], f.mul(c, points[a][i]));
          }
          line.push_back(index.at(encode(normalise(y, f), q)));
        }
        std::sort(line.begin(), line.end());
        lines.insert(std::move(line));
      }
    }
    return lines_to_pbd(points.size(), std::move(lines));
  }

  Pbd affine_space(unsigned n, unsigned q) {
    if (n < 2) {
      throw Error(Errc::bad_params, "affine_space needs n >= 2");
    }
    GaloisField const f(q);
    std::size_t       v = 1;
    for (unsigned i = 0; i < n; ++i) {
      v *= q;
    }
    auto coords = [&](std::size_t x) {
      Vec c(n);
      for (unsigned i = 0; i < n; ++i) {
        c[i] = x % q;
        x /= q;
      }
      return c;
    };
    auto index = [&](Vec const& c) {
      std::size_t x = 0;
      for (unsigned i = n; i-- > 0;) {
        x = x * q + c[i];
      }
      return static_cast<Point>(x);
    };
    std::set<Block> lines;
    for (std::size_t a = 0; a < v; ++a) {
      Vec const ca = coords(a);
      for (std::size_t b = a + 1; b < v; ++b) {
        Vec const cb = coords(b);
        Block     line;
        for (unsigned t = 0; t < q; ++t) {
          Vec y(n);
          for (unsigned i = 0; i < n; ++i) {
            y[i] = f.add(ca[i], f.mul(t, f.sub(cb[i], ca[i])));
          }
          line.push_back(index(y));
        }
        std::sort(line.begin(), line.end());
        lines.insert(std::move(line));
      }
    }
    return lines_to_pbd(v, std::move(lines));
  }

  Pbd hall_plane6() {
    std::vector<Block> blocks{{0, 1, 2}, {0, 4, 5}, {2, 3, 4}};
    std::vector<bool>  covered(36, false);
    for (auto const& b : blocks) {
      for (Point p : b) {
        for (Point q : b) {
          covered[p * 6 + q] = true;
        }
      }
    }
    for (Point p = 0; p < 6; ++p) {
      for (Point q = p + 1; q < 6; ++q) {
        if (!covered[p * 6 + q]) {
          blocks.push_back({p, q});
        }
      }
    }
    return validate_pbd(6, std::move(blocks));
  }

  Gdd td3_from_latin(LatinSquare const& square) {
    auto const         m = static_cast<Point>(square.order());
    std::vector<Block> groups(3);
    for (Point i = 0; i < m; ++i) {
      groups[0].push_back(i);
      groups[1].push_back(m + i);
      groups[2].push_back(2 * m + i);
    }
    std::vector<Block> blocks;
    for (Point i = 0; i < m; ++i) {
      for (Point j = 0; j < m; ++j) {
        blocks.push_back({i, m + j, 2 * m + square(i, j)});
      }
    }
    return validate_gdd(3 * m, std::move(groups), std::move(blocks));
  }

  Pbd gdd_to_pbd(Gdd const& g) {
    std::vector<Block> blocks = g.blocks;
    for (auto const& grp : g.groups) {
      if (grp.size() >= 2) {
        blocks.push_back(grp);
      }
    }
    return validate_pbd(g.v, std::move(blocks));
  }

  Gdd gdd_from_pbd(Pbd const& x, std::span<Block const> group_blocks) {
    std::set<Block>    chosen(group_blocks.begin(), group_blocks.end());
    std::vector<Block> groups(chosen.begin(), chosen.end());
    std::vector<bool>  seen(x.size(), false);
    for (auto const& grp : groups) {
      for (Point p : grp) {
        seen[p] = true;
      }
    }
    for (Point p = 0; p < x.size(); ++p) {
      if (!seen[p]) {
        groups.push_back({p});
      }
    }
    std::vector<Block> blocks;
    for (auto const& b : x.blocks()) {
      if (!chosen.contains(b)) {
        blocks.push_back(b);
      }
    }
    return validate_gdd(x.size(), std::move(groups), std::move(blocks));
  }

  Pbd break_block(Pbd const& x, Block const& b, Pbd const& replacement, std::span<Point const> embedding) {
    if (replacement.is_degenerate()) {
      throw Error(Errc::degenerate_case, "replacement design has a single block");
    }
    Block sorted_b = b;
    std::sort(sorted_b.begin(), sorted_b.end());
    if (embedding.size() != replacement.size() || sorted_b.size() != replacement.size()) {
      throw Error(Errc::size_mismatch, "block, replacement and embedding sizes differ");
    }
    Block image(embedding.begin(), embedding.end());
    std::sort(image.begin(), image.end());
    if (image != sorted_b) {
      throw Error(Errc::size_mismatch, "embedding is not a bijection onto the block");
    }
    auto const& old = x.blocks();
    if (!std::binary_search(old.begin(), old.end(), sorted_b)) {
      throw Error(Errc::result_not_pbd, "the block to break is not a block of the design");
    }
    std::vector<Block> blocks;
    for (auto const& c : old) {
      if (c != sorted_b) {
        blocks.push_back(c);
      }
    }
    for (auto const& c : replacement.blocks()) {
      Block mapped;
      for (Point p : c) {
        mapped.push_back(embedding[p]);
      }
      blocks.push_back(std::move(mapped));
    }
    try {
      return validate_pbd(x.size(), std::move(blocks));
    } catch (Error const& e) {
      throw Error(Errc::result_not_pbd, e.what());
    }
  }

  Pbd pbd_z7() {
    return gdd_to_pbd(td3_from_latin(LatinSquare::cyclic(7)));
  }

  Pbd sts21() {
    Pbd const fano = projective_space(2, 2);
    Pbd       x    = pbd_z7();
    for (Point g = 0; g < 3; ++g) {
      Block grp;
      for (Point i = 0; i < 7; ++i) {
        grp.push_back(7 * g + i);
      }
      x = break_block(x, grp, fano, grp);
    }
    return x;
  }

  Pbd wilson_sts19(LatinSquare const& square) {
    if (square.order() != 6) {
      throw Error(Errc::bad_params, "wilson_sts19 needs a Latin square of order 6");
    }
    Gdd const          td = td3_from_latin(square);
    std::vector<Block> blocks = td.blocks;
    // Fano plane from the difference set {0,1,3} mod 7; point 6 goes to the hub.
    Pbd const fano = cyclic_sts(7, {{0, 1, 3}});
    for (auto const& grp : td.groups) {
      std::vector<Point> embed(grp.begin(), grp.end());
      embed.push_back(sts19_hub);
      for (auto const& b : fano.blocks()) {
        Block mapped;
        for (Point p : b) {
          mapped.push_back(embed[p]);
        }
        blocks.push_back(std::move(mapped));
      }
    }
    return validate_pbd(19, std::move(blocks));
  }

  Pbd cyclic_sts(std::size_t v, std::vector<Block> const& base_blocks) {
    if (v < 3) {
      throw Error(Errc::bad_params, "cyclic_sts needs v >= 3");
    }
    std::set<Block> blocks;
    for (auto const& base : base_blocks) {
      for (std::size_t t = 0; t < v; ++t) {
        Block b;
        for (Point p : base) {
          b.push_back(static_cast<Point>((p + t) % v));
        }
        std::sort(b.begin(), b.end());
        blocks.insert(std::move(b));
      }
    }
    try {
      return validate_pbd(v, std::vector<Block>(blocks.begin(), blocks.end()));
    } catch (Error const& e) {
      throw Error(Errc::result_not_pbd, e.what(), e.witness());
    }
  }

  Pbd relabel(Pbd const& x, std::span<Point const> perm) {
    if (perm.size() != x.size()) {
      throw Error(Errc::size_mismatch, "relabelling has the wrong length");
    }
    std::vector<Block> blocks;
    for (auto const& b : x.blocks()) {
      Block c;
      for (Point p : b) {
        c.push_back(perm[p]);
      }
      blocks.push_back(std::move(c));
    }
    return validate_pbd(x.size(), std::move(blocks), x.is_degenerate());
  }

  bool necessary_conditions(std::span<std::size_t const> ks, std::size_t v) {
    if (ks.empty() || v == 0) {
      throw Error(Errc::bad_params, "need a nonempty block-size set and v >= 1");
    }
    std::size_t alpha = 0;
    std::size_t beta  = 0;
    for (std::size_t k : ks) {
      if (k < 2) {
        throw Error(Errc::bad_params, "block sizes must be at least 2");
      }
      alpha = std::gcd(alpha, k - 1);
      beta  = std::gcd(beta, k * (k - 1));
    }
    return (v - 1) % alpha == 0 && (v * (v - 1)) % beta == 0;
  }

  bool subsystem_bound_check(Pbd const& x, std::size_t u) {
    auto const k = x.uniform_block_size();
    if (!k) {
      throw Error(Errc::not_uniform, "block sizes differ");
    }
    if (u >= x.size()) {
      throw Error(Errc::bad_params, "subsystem order must be below v");
    }
    return x.size() >= (*k - 1) * u + 1;
  }

}  // namespace wilson

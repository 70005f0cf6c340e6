#pragma once

// Brute-force reference implementations used by the tests. They work from
// raw block lists and plain loops and share no code with the library
// beyond the Subset helpers and PartialMap container.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "wilson/morphism.hpp"
#include "wilson/subset.hpp"

namespace oracle {

  using wilson::Point;
  using wilson::Subset;

  inline bool closed(std::vector<std::vector<Point>> const& blocks, Subset s) {
    for (auto const& b : blocks) {
      int inside = 0;
      for (Point p : b) {
        inside += (s >> p) & 1U;
      }
      if (inside >= 2) {
        for (Point p : b) {
          if (!((s >> p) & 1U)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! Every subset closed under the block through two of its points.
  inline std::set<Subset> subsystems(std::size_t v, std::vector<std::vector<Point>> const& blocks) {
    std::set<Subset> out;
    for (Subset s = 0; s < (Subset{1} << v); ++s) {
      if (closed(blocks, s)) {
        out.insert(s);
      }
    }
    return out;
  }

  //! Morphism by definition: open domain and the Wilson preimage of every
  //! subsystem (preimage plus undefined points) is a subsystem.
  inline bool is_morphism(wilson::PartialMap const& f, std::set<Subset> const& subs_x,
                          std::set<Subset> const& subs_y, std::size_t v) {
    Subset undefined = 0;
    for (Point p = 0; p < v; ++p) {
      if (f(p) == wilson::PartialMap::undefined) {
        undefined |= Subset{1} << p;
      }
    }
    if (!subs_x.contains(undefined)) {
      return false;
    }
    for (Subset y : subs_y) {
      Subset pre = undefined;
      for (Point p = 0; p < v; ++p) {
        if (f(p) != wilson::PartialMap::undefined && ((y >> f(p)) & 1U)) {
          pre |= Subset{1} << p;
        }
      }
      if (!subs_x.contains(pre)) {
        return false;
      }
    }
    return true;
  }

  //! All partial self-maps of v points that are morphisms, by definition.
  inline std::set<wilson::PartialMap> all_morphisms(std::size_t v, std::vector<std::vector<Point>> const& blocks) {
    auto const                   subs = subsystems(v, blocks);
    std::set<wilson::PartialMap> out;
    std::vector<std::size_t>     digits(v, 0);
    std::vector<Point>           t(v);
    while (true) {
      for (std::size_t i = 0; i < v; ++i) {
        t[i] = digits[i] == v ? wilson::PartialMap::undefined : static_cast<Point>(digits[i]);
      }
      wilson::PartialMap f(v, v, t);
      if (is_morphism(f, subs, subs, v)) {
        out.insert(f);
      }
      std::size_t i = 0;
      while (i < v && ++digits[i] == v + 1) {
        digits[i++] = 0;
      }
      if (i == v) {
        break;
      }
    }
    return out;
  }

  //! Set partitions of n points as class-of vectors (restricted growth).
  inline std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>>          out;
    std::vector<int>                       a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max) {
      if (i == n) {
        out.push_back(a);
        return;
      }
      for (int c = 0; c <= max + 1; ++c) {
        a[i] = c;
        rec(i + 1, std::max(max, c));
      }
    };
    if (n > 0) {
      a[0] = 0;
      rec(1, 0);
    }
    return out;
  }

  //! Edge sets of K5 (edges in lexicographic order) inside the classes of
  //! each partition of the five vertices.
  inline std::set<Subset> k5_partition_flats() {
    std::set<Subset> out;
    for (auto const& cls : set_partitions(5)) {
      Subset s = 0;
      int    e = 0;
      for (int a = 0; a < 5; ++a) {
        for (int b = a + 1; b < 5; ++b, ++e) {
          if (cls[a] == cls[b]) {
            s |= Subset{1} << e;
          }
        }
      }
      out.insert(s);
    }
    return out;
  }

  //! Fano points as the nonzero vectors of GF(2)^3, point p <-> p + 1 read
  //! as bits; lines are triples with XOR zero.
  inline std::vector<std::vector<Point>> fano_by_xor() {
    std::vector<std::vector<Point>> blocks;
    for (Point a = 1; a < 8; ++a) {
      for (Point b = a + 1; b < 8; ++b) {
        Point const c = a ^ b;
        if (c > b) {
          blocks.push_back({a - 1, b - 1, c - 1});
        }
      }
    }
    return blocks;
  }

  //! Invertible 3x3 matrices over GF(2), as permutations of the labels of
  //! fano_by_xor.
  inline std::set<std::vector<Point>> gl32_permutations() {
    std::set<std::vector<Point>> out;
    for (unsigned c0 = 1; c0 < 8; ++c0) {
      for (unsigned c1 = 1; c1 < 8; ++c1) {
        for (unsigned c2 = 1; c2 < 8; ++c2) {
          std::vector<Point> perm(7);
          std::set<Point>    seen;
          for (unsigned x = 1; x < 8; ++x) {
            unsigned y = 0;
            y ^= (x & 1U) ? c0 : 0;
            y ^= (x & 2U) ? c1 : 0;
            y ^= (x & 4U) ? c2 : 0;
            perm[x - 1] = y == 0 ? 99 : y - 1;
            seen.insert(perm[x - 1]);
          }
          if (seen.size() == 7 && !seen.contains(99)) {
            out.insert(perm);
          }
        }
      }
    }
    return out;
  }

  //! AG(2,3) on points x + 3y; all maps v -> Av + b over GF(3) plus all
  //! partial constants on open domains, as defined maps on 9 points.
  inline std::set<wilson::PartialMap> ag23_affine_and_constants(std::set<Subset> const& subsystems) {
    std::set<wilson::PartialMap> out;
    auto pt = [](int x, int y) { return static_cast<Point>(x + 3 * y); };
    for (int a = 0; a < 81; ++a) {
      int const m00 = a % 3, m01 = (a / 3) % 3, m10 = (a / 9) % 3, m11 = (a / 27) % 3;
      for (int b = 0; b < 9; ++b) {
        int const          b0 = b % 3, b1 = b / 3;
        std::vector<Point> t(9);
        for (int x = 0; x < 3; ++x) {
          for (int y = 0; y < 3; ++y) {
            t[pt(x, y)] = pt((m00 * x + m01 * y + b0) % 3, (m10 * x + m11 * y + b1) % 3);
          }
        }
        out.insert(wilson::PartialMap(9, 9, t));
      }
    }
    Subset const all = (Subset{1} << 9) - 1;
    for (Subset y : subsystems) {
      Subset const open = all & ~y;
      for (Point c = 0; c < 9; ++c) {
        std::vector<Point> t(9, wilson::PartialMap::undefined);
        for (Point p = 0; p < 9; ++p) {
          if ((open >> p) & 1U) {
            t[p] = c;
          }
        }
        out.insert(wilson::PartialMap(9, 9, t));
      }
    }
    return out;
  }

  //! g after f, written out on the tables.
  inline wilson::PartialMap after(wilson::PartialMap const& g, wilson::PartialMap const& f) {
    std::vector<Point> t(f.source_size(), wilson::PartialMap::undefined);
    for (Point p = 0; p < f.source_size(); ++p) {
      if (f(p) != wilson::PartialMap::undefined) {
        t[p] = g(f(p));
      }
    }
    return wilson::PartialMap(f.source_size(), g.target_size(), t);
  }

  //! f is regular in the set `monoid` if f g f = f for some g in it.
  inline bool regular_in(wilson::PartialMap const& f, std::vector<wilson::PartialMap> const& monoid) {
    for (auto const& g : monoid) {
      if (after(f, after(g, f)) == f) {
        return true;
      }
    }
    return false;
  }

}  // namespace oracle

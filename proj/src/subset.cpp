#include "wilson/subset.hpp"

#include "wilson/error.hpp"

namespace wilson {

  std::vector<Point> members(Subset s) {
    std::vector<Point> out;
    out.reserve(cardinality(s));
    for_each_point(s, [&](Point p) { out.push_back(p); });
    return out;
  }

  Subset to_subset(std::span<Point const> points) {
    Subset s = 0;
    for (Point p : points) {
      if (p >= max_subset_points) {
        throw Error(Errc::too_large, "point " + std::to_string(p) + " does not fit a 64-bit set");
      }
      s |= bit(p);
    }
    return s;
  }

  void require_subset_capacity(std::size_t v, char const* where) {
    if (v > max_subset_points) {
      throw Error(Errc::too_large,
                  std::string(where) + " supports at most 64 points, got " + std::to_string(v));
    }
  }

  std::string format_subset(Subset s) {
    std::string out = "{";
    bool        first = true;
    for_each_point(s, [&](Point p) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(p);
      first = false;
    });
    return out + "}";
  }

  bool canonical_less(Subset a, Subset b) noexcept {
    auto const ca = cardinality(a);
    auto const cb = cardinality(b);
    if (ca != cb) {
      return ca < cb;
    }
    // Lexicographic on sorted member lists: the first differing member decides.
    Subset const diff = a ^ b;
    if (diff == 0) {
      return false;
    }
    return contains(a, lowest(diff));
  }

}  // namespace wilson

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wilson {

  using Point  = std::uint32_t;
  using Subset = std::uint64_t;  //!< bit p set iff point p is a member

  inline constexpr std::size_t max_subset_points = 64;

  constexpr Subset bit(Point p) noexcept {
    return Subset{1} << p;
  }

  constexpr bool contains(Subset s, Point p) noexcept {
    return (s >> p) & 1U;
  }

  constexpr bool is_subset(Subset a, Subset b) noexcept {
    return (a & ~b) == 0;
  }

  constexpr std::size_t cardinality(Subset s) noexcept {
    return static_cast<std::size_t>(std::popcount(s));
  }

  constexpr Subset full_set(std::size_t v) noexcept {
    return v >= 64 ? ~Subset{0} : (Subset{1} << v) - 1;
  }

  constexpr Point lowest(Subset s) noexcept {
    return static_cast<Point>(std::countr_zero(s));
  }

  template <typename Visit>
  void for_each_point(Subset s, Visit&& visit) {
    while (s != 0) {
      visit(lowest(s));
      s &= s - 1;
    }
  }

  std::vector<Point> members(Subset s);
  Subset             to_subset(std::span<Point const> points);

  //! Throws TooLarge when v exceeds what a Subset can hold.
  void require_subset_capacity(std::size_t v, char const* where);

  //! "{0,2,5}"
  std::string format_subset(Subset s);

  //! Canonical order for families of sets: by size, then by member list.
  bool canonical_less(Subset a, Subset b) noexcept;

}  // namespace wilson

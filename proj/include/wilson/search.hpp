#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wilson/incidence.hpp"
#include "wilson/morphism.hpp"

namespace wilson {

  //! Constraints for a backtracking search over partial maps source ->
  //! target that are morphisms (checked blockwise as points are assigned).
  struct MorphismSearch {
    MorphismSearch(Pbd const& source, Pbd const& target);

    Pbd const* source;
    Pbd const* target;
    //! Allowed values per source point; defaults to every target point.
    std::vector<Subset> allowed;
    //! Source points that may be left undefined; defaults to all.
    Subset may_be_undefined;
    //! Every block must map to at most one point or onto a block.
    bool open_only = false;
    //! Caps on the number of undefined points and on each fibre.
    std::optional<std::size_t> max_undefined;
    std::optional<std::size_t> fiber_cap;
    //! Accept only maps with exactly this image.
    std::optional<Subset> exact_image;
  };

  //! Visits every morphism satisfying the constraints in a fixed order; the
  //! visitor returns false to stop. Source and target have at most 64 points.
  void for_each_morphism(MorphismSearch const& query, std::function<bool(std::vector<Point> const&)> const& visit);

  //! All matches, sorted. With workers > 1 the branches of the first
  //! assigned point are split across threads.
  std::vector<PartialMap> all_morphisms(MorphismSearch const& query, unsigned workers = 1);

  std::optional<PartialMap> find_morphism(MorphismSearch const& query);

}  // namespace wilson

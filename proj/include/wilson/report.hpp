#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "wilson/complex.hpp"
#include "wilson/green.hpp"
#include "wilson/mld.hpp"
#include "wilson/wmonoid.hpp"

namespace wilson {

  using Json = nlohmann::ordered_json;

  //! Member count, height, gradedness and atom count of a Moore family.
  Json lattice_stats(MooreFamily const& family);

  struct MonoidSummary {
    std::size_t                  size = 0;
    std::size_t                  units = 0;
    std::size_t                  ideal = 0;  //!< partial constants
    std::size_t                  regular_j_classes = 0;
    bool                         reduced = false;
    bool                         ggm = false;
    bool                         small = false;
    bool                         wilson_type = false;
    std::string                  unit_group;
    std::optional<std::uint64_t> hull;  //!< computed when the matrix has at most 8 rows
  };

  MonoidSummary summarize_monoid(WilsonMonoid const& w);
  Json          to_json(MonoidSummary const& s);

  //! Per J-class: size, regular flag, R and L counts, subgroup order and
  //! the classes it covers.
  Json eggbox(FiniteMonoid const& m, JClassPoset const& poset);

  Json to_json(GreenwReport const& r);
  Json to_json(ComplexityReport const& r);

}  // namespace wilson

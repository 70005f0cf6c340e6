#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wilson/incidence.hpp"

namespace wilson {

  struct NamedDesign {
    std::string name;
    Pbd         design;
  };

  //! Designs by short name: fano, sts3, sts13, sts19, sts21, pbd-z7, hall6,
  //! ag23, pg32, kN (complete graph), npN (near pencil on N+1 points),
  //! mld-L-D.
  std::optional<Pbd> named_design(std::string_view name);

  //! Complete graphs up to 6, near pencils up to 5, Fano, AG(2,3), Hall6,
  //! PBD(Z7), STS(21), PG(3,2) and M(3,1), M(3,2), M(4,2), M(4,3).
  std::vector<NamedDesign> erection_catalog();

  //! The cyclic STS(13) with base blocks {0,1,4} and {0,2,7}.
  Pbd sts13();

}  // namespace wilson

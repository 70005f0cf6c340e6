#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wilson/complex.hpp"
#include "wilson/incidence.hpp"
#include "wilson/morphism.hpp"

namespace wilson {

  //! Contents of a design file before validation.
  //!
  //!     # comment
  //!     v=7
  //!     groups=0 1 2 | 3 4 5 | 6     (GDD files only)
  //!     0 1 3
  //!     ...
  //!
  //! Complexes and Moore families use the same layout with a `kind=complex`
  //! or `kind=moore` line before `v=`; `-` stands for the empty set.
  struct DesignText {
    std::string                      kind = "pbd";  //!< pbd, gdd, complex or moore
    std::size_t                      v    = 0;
    std::optional<std::vector<Block>> groups;
    std::vector<Block>               rows;
  };

  //! Throws ParseError with the offending line number in the message.
  DesignText parse_design_text(std::string_view text);

  //! Degenerate single-block designs are accepted so that they can be
  //! analysed. Validation errors propagate unchanged.
  Pbd                parse_pbd(std::string_view text);
  Gdd                parse_gdd(std::string_view text);
  SimplicialComplex  parse_complex(std::string_view text);
  MooreFamily        parse_moore(std::string_view text);

  //! Canonical output: blocks in the design's order, one per line.
  std::string format_pbd(Pbd const& x);
  std::string format_gdd(Gdd const& g);
  std::string format_complex(SimplicialComplex const& s);
  std::string format_moore(MooreFamily const& f);

  //! `map v=<n> -> w=<m>: a0 a1 ... ` with `_` for undefined points.
  std::string format_map(PartialMap const& f);
  PartialMap  parse_map(std::string_view line);

  //! Whole-file helpers; failures to open raise ParseError.
  std::string read_text_file(std::filesystem::path const& path);
  void        write_text_file(std::filesystem::path const& path, std::string_view text);

}  // namespace wilson

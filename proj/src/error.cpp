#include "wilson/error.hpp"

namespace wilson {

  std::string_view to_string(Errc code) noexcept {
    switch (code) {
      case Errc::pair_uncovered: return "PairUncovered";
      case Errc::pair_double_covered: return "PairDoubleCovered";
      case Errc::block_too_small: return "BlockTooSmall";
      case Errc::degenerate_case: return "DegenerateCase";
      case Errc::point_out_of_range: return "PointOutOfRange";
      case Errc::size_mismatch: return "SizeMismatch";
      case Errc::result_not_pbd: return "ResultNotPBD";
      case Errc::not_uniform: return "NotUniform";
      case Errc::bad_params: return "BadParams";
      case Errc::unsupported_field: return "UnsupportedField";
      case Errc::parse_error: return "ParseError";
      case Errc::too_large: return "TooLarge";
      case Errc::not_simple_rank3_matroid: return "NotSimpleRank3Matroid";
      case Errc::not_circuit_hyperplane: return "NotCircuitHyperplane";
      case Errc::not_a_morphism: return "NotAMorphism";
      case Errc::non_uniform_fibers: return "NonUniformFibers";
      case Errc::empty_image: return "EmptyImage";
      case Errc::empty_fiber: return "EmptyFiber";
      case Errc::gdd_axiom_violation: return "GDDAxiomViolation";
      case Errc::not_latin_square: return "NotLatinSquare";
      case Errc::trivial_pbd: return "TrivialPBD";
      case Errc::not_reduced: return "NotReduced";
      case Errc::not_regular_class: return "NotRegularClass";
      case Errc::not_an_ideal: return "NotAnIdeal";
      case Errc::no_zero: return "NoZero";
      case Errc::domain_not_open: return "DomainNotOpen";
      case Errc::not_in_monoid: return "NotInMonoid";
      case Errc::invariant_violation: return "InvariantViolation";
    }
    return "Unknown";
  }

  Error::Error(Errc code, std::string const& message, std::vector<std::uint32_t> witness)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        _code(code),
        _witness(std::move(witness)) {}

}  // namespace wilson

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wilson {

  //! Failure categories raised by the library.
  enum class Errc {
    pair_uncovered,
    pair_double_covered,
    block_too_small,
    degenerate_case,
    point_out_of_range,
    size_mismatch,
    result_not_pbd,
    not_uniform,
    bad_params,
    unsupported_field,
    parse_error,
    too_large,
    not_simple_rank3_matroid,
    not_circuit_hyperplane,
    not_a_morphism,
    non_uniform_fibers,
    empty_image,
    empty_fiber,
    gdd_axiom_violation,
    not_latin_square,
    trivial_pbd,
    not_reduced,
    not_regular_class,
    not_an_ideal,
    no_zero,
    domain_not_open,
    not_in_monoid,
    invariant_violation
  };

  std::string_view to_string(Errc code) noexcept;

  //! Exception carrying an error code and, where it helps, witness points.
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& message, std::vector<std::uint32_t> witness = {});

    Errc code() const noexcept {
      return _code;
    }

    std::vector<std::uint32_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    Errc                       _code;
    std::vector<std::uint32_t> _witness;
  };

}  // namespace wilson

#pragma once

#include <optional>

#include "wilson/error.hpp"

//! The error code thrown by fn, or nullopt if it returns normally.
template <typename Fn>
std::optional<wilson::Errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (wilson::Error const& e) {
    return e.code();
  }
  return std::nullopt;
}

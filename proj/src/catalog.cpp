#include "wilson/catalog.hpp"

#include <charconv>

#include "wilson/mld.hpp"

namespace wilson {

  namespace {

    std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
      if (!name.starts_with(prefix) || name.size() == prefix.size()) {
        return std::nullopt;
      }
      std::size_t value = 0;
      auto const  rest  = name.substr(prefix.size());
      auto [ptr, ec]    = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
        return std::nullopt;
      }
      return value;
    }

  }  // namespace

  Pbd sts13() {
    return cyclic_sts(13, {{0, 1, 4}, {0, 2, 7}});
  }

  std::optional<Pbd> named_design(std::string_view name) {
    if (name == "fano") {
      return projective_space(2, 2);
    }
    if (name == "sts3") {
      return trivial_pbd(3);
    }
    if (name == "sts13") {
      return sts13();
    }
    if (name == "sts19") {
      return wilson_sts19(LatinSquare::cyclic(6));
    }
    if (name == "sts21") {
      return sts21();
    }
    if (name == "pbd-z7") {
      return pbd_z7();
    }
    if (name == "hall6") {
      return hall_plane6();
    }
    if (name == "ag23") {
      return affine_space(2, 3);
    }
    if (name == "pg32") {
      return projective_space(3, 2);
    }
    if (auto n = suffix_number(name, "k")) {
      return complete_graph(*n);
    }
    if (auto n = suffix_number(name, "np")) {
      return near_pencil(*n);
    }
    if (name.starts_with("mld-")) {
      auto const dash = name.find('-', 4);
      if (dash != std::string_view::npos) {
        auto l = suffix_number(name.substr(0, dash), "mld-");
        auto d = suffix_number(name.substr(dash), "-");
        if (l && d) {
          return mld_design(*l, *d).design;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<NamedDesign> erection_catalog() {
    std::vector<NamedDesign> out;
    for (std::size_t n = 3; n <= 6; ++n) {
      out.push_back({"k" + std::to_string(n), complete_graph(n)});
    }
    for (std::size_t n = 3; n <= 5; ++n) {
      out.push_back({"np" + std::to_string(n), near_pencil(n)});
    }
    out.push_back({"fano", projective_space(2, 2)});
    out.push_back({"ag23", affine_space(2, 3)});
    out.push_back({"hall6", hall_plane6()});
    out.push_back({"pbd-z7", pbd_z7()});
    out.push_back({"sts21", sts21()});
    out.push_back({"pg32", projective_space(3, 2)});
    for (auto [l, d] : {std::pair{3, 1}, {3, 2}, {4, 2}, {4, 3}}) {
      out.push_back({"mld-" + std::to_string(l) + "-" + std::to_string(d), mld_design(l, d).design});
    }
    return out;
  }

}  // namespace wilson

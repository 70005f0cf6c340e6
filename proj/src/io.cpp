#include "wilson/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wilson/error.hpp"

namespace wilson {

  namespace {

    [[noreturn]] void fail(std::size_t line, std::string const& what) {
      throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
    }

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    std::vector<std::string_view> tokens(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::size_t number(std::string_view tok, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail(line, "expected a number, got '" + std::string(tok) + "'");
      }
      return value;
    }

    Block parse_row(std::string_view s, std::size_t line) {
      auto const toks = tokens(s);
      if (toks.size() == 1 && toks.front() == "-") {
        return {};
      }
      Block b;
      for (auto tok : toks) {
        std::size_t const p = number(tok, line);
        if (p > 0xFFFFFFFEU) {
          fail(line, "point index too large");
        }
        b.push_back(static_cast<Point>(p));
      }
      return b;
    }

    std::string row_text(std::vector<Point> const& row) {
      if (row.empty()) {
        return "-";
      }
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += (i == 0 ? "" : " ") + std::to_string(row[i]);
      }
      return s;
    }

    std::vector<Subset> as_subsets(DesignText const& d) {
      require_subset_capacity(d.v, "set family");
      std::vector<Subset> out;
      for (auto const& r : d.rows) {
        for (Point p : r) {
          if (p >= d.v) {
            throw Error(Errc::point_out_of_range, "point " + std::to_string(p) + " outside 0.." + std::to_string(d.v - 1),
                        {p});
          }
        }
        out.push_back(to_subset(r));
      }
      return out;
    }

    DesignText expect_kind(std::string_view text, std::string_view kind) {
      DesignText d = parse_design_text(text);
      if (d.kind != kind) {
        throw Error(Errc::parse_error, "expected kind=" + std::string(kind) + ", got kind=" + d.kind);
      }
      return d;
    }

  }  // namespace

  DesignText parse_design_text(std::string_view text) {
    DesignText  out;
    bool        have_v      = false;
    bool        have_kind   = false;
    std::size_t line_number = 0;
    std::size_t pos         = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_number;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      if (line.starts_with("kind=")) {
        if (have_kind || have_v) {
          fail(line_number, "kind= must come once, before v=");
        }
        out.kind = std::string(trim(line.substr(5)));
        if (out.kind != "pbd" && out.kind != "gdd" && out.kind != "complex" && out.kind != "moore") {
          fail(line_number, "unknown kind '" + out.kind + "'");
        }
        have_kind = true;
        continue;
      }
      if (line.starts_with("v=")) {
        if (have_v) {
          fail(line_number, "duplicate v=");
        }
        out.v  = number(trim(line.substr(2)), line_number);
        have_v = true;
        continue;
      }
      if (!have_v) {
        fail(line_number, "missing v= header");
      }
      if (line.starts_with("groups=")) {
        if (out.groups || !out.rows.empty()) {
          fail(line_number, "groups= must come once, before the blocks");
        }
        std::vector<Block> groups;
        std::string_view   rest = line.substr(7);
        while (true) {
          auto const bar = rest.find('|');
          groups.push_back(parse_row(rest.substr(0, bar), line_number));
          if (bar == std::string_view::npos) {
            break;
          }
          rest = rest.substr(bar + 1);
        }
        out.groups = std::move(groups);
        if (!have_kind) {
          out.kind = "gdd";
        }
        continue;
      }
      out.rows.push_back(parse_row(line, line_number));
    }
    if (!have_v) {
      throw Error(Errc::parse_error, "missing v= header");
    }
    if (out.groups && out.kind != "gdd") {
      throw Error(Errc::parse_error, "groups= only allowed in GDD files");
    }
    return out;
  }

  Pbd parse_pbd(std::string_view text) {
    DesignText d = expect_kind(text, "pbd");
    return validate_pbd(d.v, std::move(d.rows), true);
  }

  Gdd parse_gdd(std::string_view text) {
    DesignText d = expect_kind(text, "gdd");
    if (!d.groups) {
      throw Error(Errc::parse_error, "GDD file without groups= line");
    }
    return validate_gdd(d.v, std::move(*d.groups), std::move(d.rows));
  }

  SimplicialComplex parse_complex(std::string_view text) {
    DesignText const d = expect_kind(text, "complex");
    return SimplicialComplex(d.v, as_subsets(d));
  }

  MooreFamily parse_moore(std::string_view text) {
    DesignText const d = expect_kind(text, "moore");
    return MooreFamily(d.v, as_subsets(d));
  }

  std::string format_pbd(Pbd const& x) {
    std::string s = "v=" + std::to_string(x.size()) + "\n";
    for (auto const& b : x.blocks()) {
      s += row_text(b) + "\n";
    }
    return s;
  }

  std::string format_gdd(Gdd const& g) {
    std::string s = "kind=gdd\nv=" + std::to_string(g.v) + "\ngroups=";
    for (std::size_t i = 0; i < g.groups.size(); ++i) {
      s += (i == 0 ? "" : " | ") + row_text(g.groups[i]);
    }
    s += "\n";
    for (auto const& b : g.blocks) {
      s += row_text(b) + "\n";
    }
    return s;
  }

  std::string format_complex(SimplicialComplex const& c) {
    std::string s = "kind=complex\nv=" + std::to_string(c.size()) + "\n";
    for (Subset f : c.facets()) {
      s += row_text(members(f)) + "\n";
    }
    return s;
  }

  std::string format_moore(MooreFamily const& f) {
    std::string s = "kind=moore\nv=" + std::to_string(f.size()) + "\n";
    for (Subset m : f.members()) {
      s += row_text(members(m)) + "\n";
    }
    return s;
  }

  std::string format_map(PartialMap const& f) {
    std::string s = "map v=" + std::to_string(f.source_size()) + " -> w=" + std::to_string(f.target_size()) + ":";
    for (Point p = 0; p < f.source_size(); ++p) {
      s += " ";
      s += f.is_defined(p) ? std::to_string(f(p)) : "_";
    }
    return s;
  }

  PartialMap parse_map(std::string_view line) {
    line                = trim(line);
    auto const colon    = line.find(':');
    auto const arrow    = line.find("->");
    if (!line.starts_with("map") || colon == std::string_view::npos || arrow == std::string_view::npos
        || arrow > colon) {
      throw Error(Errc::parse_error, "expected 'map v=<n> -> w=<m>: ...'");
    }
    auto const lhs = trim(line.substr(3, arrow - 3));
    auto const rhs = trim(line.substr(arrow + 2, colon - arrow - 2));
    if (!lhs.starts_with("v=") || !rhs.starts_with("w=")) {
      throw Error(Errc::parse_error, "expected 'map v=<n> -> w=<m>: ...'");
    }
    std::size_t const  n = number(lhs.substr(2), 1);
    std::size_t const  m = number(rhs.substr(2), 1);
    auto const         toks = tokens(line.substr(colon + 1));
    if (toks.size() != n) {
      throw Error(Errc::parse_error, "map lists " + std::to_string(toks.size()) + " values for " + std::to_string(n)
                                         + " points");
    }
    std::vector<Point> table;
    for (auto tok : toks) {
      if (tok == "_") {
        table.push_back(PartialMap::undefined);
        continue;
      }
      std::size_t const value = number(tok, 1);
      if (value >= m) {
        throw Error(Errc::parse_error, "value " + std::string(tok) + " outside the target");
      }
      table.push_back(static_cast<Point>(value));
    }
    return PartialMap(n, m, std::move(table));
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(Errc::parse_error, "cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void write_text_file(std::filesystem::path const& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(Errc::parse_error, "cannot write " + path.string());
    }
    out << text;
  }

}  // namespace wilson

#include "wilson/report.hpp"

#include <algorithm>

namespace wilson {

  Json lattice_stats(MooreFamily const& family) {
    LatticeView const lattice(family);
    auto const&       atoms = lattice.upper_covers(lattice.bottom());
    Json              j;
    j["members"] = family.members().size();
    j["height"]  = lattice.height();
    j["min_chain"] = lattice.min_chain_length();
    j["graded"]  = is_graded_lattice(lattice);
    j["atoms"]   = atoms.size();
    return j;
  }

  MonoidSummary summarize_monoid(WilsonMonoid const& w) {
    FiniteMonoid const mon   = w.as_monoid();
    JClassPoset const  poset = green_relations(mon);
    MonoidSummary      s;
    s.size  = w.size();
    s.units = units(w).size();
    s.ideal = constant_ideal(w).size();
    s.regular_j_classes
        = static_cast<std::size_t>(std::count(poset.regular.begin(), poset.regular.end(), true));
    s.unit_group = maximal_subgroup(mon, poset, poset.j_class[w.identity()]).name;
    ReesMatrix const r = rees_structure(w.design(), true);
    s.reduced          = r.is_reduced();
    s.ggm              = is_ggm(w);
    s.small            = is_small_monoid(w);
    s.wilson_type      = find_split_idempotent(w).has_value();
    if (s.reduced && r.rows.size() <= 8) {
      s.hull = translational_hull_size(r);
    }
    return s;
  }

  Json to_json(MonoidSummary const& s) {
    Json j;
    j["size"]              = s.size;
    j["units"]             = s.units;
    j["unit_group"]        = s.unit_group;
    j["ideal"]             = s.ideal;
    j["rest"]              = s.size - s.units - s.ideal;
    j["regular_j_classes"] = s.regular_j_classes;
    j["reduced"]           = s.reduced;
    j["ggm"]               = s.ggm;
    j["small"]             = s.small;
    j["wilson_type"]       = s.wilson_type;
    j["hull"]              = s.hull ? Json(*s.hull) : Json(nullptr);
    return j;
  }

  Json eggbox(FiniteMonoid const& m, JClassPoset const& poset) {
    Json classes = Json::array();
    for (std::uint32_t c = 0; c < poset.classes.size(); ++c) {
      auto const&             cls = poset.classes[c];
      std::vector<std::uint32_t> rs;
      std::vector<std::uint32_t> ls;
      for (Index i : cls) {
        rs.push_back(poset.r_class[i]);
        ls.push_back(poset.l_class[i]);
      }
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      Json j;
      j["class"]     = c;
      j["size"]      = cls.size();
      j["regular"]   = static_cast<bool>(poset.regular[c]);
      j["r_classes"] = rs.size();
      j["l_classes"] = ls.size();
      if (poset.regular[c]) {
        auto const g     = maximal_subgroup(m, poset, c);
        j["group_order"] = g.order;
        j["group"]       = g.name;
      } else {
        j["group_order"] = nullptr;
      }
      if (auto const* f = m.map(cls.front())) {
        j["rank"] = f->rank();
      }
      j["covers"] = poset.lower_covers[c];
      classes.push_back(std::move(j));
    }
    Json out;
    out["elements"]  = m.size();
    out["j_classes"] = poset.classes.size();
    out["classes"]   = std::move(classes);
    return out;
  }

  namespace {

    Json clauses_json(std::vector<Clause> const& clauses) {
      Json arr = Json::array();
      for (auto const& c : clauses) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.detail.empty()) {
          j["detail"] = c.detail;
        }
        arr.push_back(std::move(j));
      }
      return arr;
    }

  }  // namespace

  Json to_json(GreenwReport const& r) {
    Json j;
    j["l"]                    = r.l;
    j["d"]                    = r.d;
    j["monoid_size"]          = r.monoid_size;
    j["j_classes"]            = r.j_classes;
    j["regular_j_classes"]    = r.regular_j_classes;
    j["non_regular_elements"] = r.non_regular_elements;
    Json regular              = Json::array();
    for (auto const& c : r.regular) {
      regular.push_back(Json{{"label", c.label}, {"size", c.size}, {"group", c.group.name},
                             {"group_order", c.group.order}});
    }
    j["regular"] = std::move(regular);
    j["clauses"] = clauses_json(r.clauses);
    j["pass"]    = r.pass();
    return j;
  }

  Json to_json(ComplexityReport const& r) {
    Json j;
    j["l"]           = r.l;
    j["d"]           = r.d;
    j["monoid_size"] = r.monoid_size;
    j["ideal_size"]  = r.ideal_size;
    j["clauses"]     = clauses_json(r.clauses);
    j["pass"]        = r.pass();
    return j;
  }

}  // namespace wilson

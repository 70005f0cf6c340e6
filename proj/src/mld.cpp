#include "wilson/mld.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "wilson/complex.hpp"
#include "wilson/error.hpp"

namespace wilson {

  namespace {

    std::size_t factorial(std::size_t n) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
      }
      return f;
    }

    std::string describe(PartialMap const& f) {
      std::string s = "[";
      for (Point p = 0; p < f.source_size(); ++p) {
        s += p == 0 ? "" : " ";
        s += f.is_defined(p) ? std::to_string(f(p)) : "_";
      }
      return s + "]";
    }

    Clause clause(std::string name, bool pass, std::string detail = {}) {
      return Clause{std::move(name), pass, std::move(detail)};
    }

    // Label of a regular element per the structure theorem.
    std::string regular_label(Mld const& m, PartialMap const& f) {
      Subset const im = f.image();
      if (is_subset(m.big(), im)) {
        return "J_L," + std::to_string(cardinality(im) - m.l);
      }
      return "J_" + std::to_string(cardinality(im));
    }

    std::vector<Point> restrict_table(PartialMap const& f, std::size_t n) {
      return std::vector<Point>(f.table().begin(), f.table().begin() + static_cast<std::ptrdiff_t>(n));
    }

  }  // namespace

  Mld mld_design(std::size_t l, std::size_t d) {
    if (l < 3 || d < 1) {
      throw Error(Errc::bad_params, "M(l,d) needs l >= 3 and d >= 1");
    }
    std::size_t const  v = l + d;
    std::vector<Block> blocks;
    Block              big;
    for (Point i = 0; i < l; ++i) {
      big.push_back(i);
    }
    blocks.push_back(big);
    for (Point j = static_cast<Point>(l); j < v; ++j) {
      for (Point i = 0; i < j; ++i) {
        blocks.push_back({i, j});
      }
    }
    return Mld{l, d, validate_pbd(v, std::move(blocks))};
  }

  bool mld_is_subsystem(Mld const& m, Subset x) {
    return is_subset(m.big(), x) || cardinality(m.big() & x) <= 1;
  }

  bool mld_is_open(Mld const& m, Subset x) {
    return is_subset(x, m.rest()) || cardinality(m.big() & x) + 1 >= m.l;
  }

  bool mld_membership(Mld const& m, PartialMap const& f) {
    std::size_t const v = m.l + m.d;
    if (f.source_size() != v || f.target_size() != v) {
      throw Error(Errc::size_mismatch, "map does not act on M(l,d)");
    }
    Subset const on_big = f.image_of(m.big());
    if (!is_subset(m.big(), f.domain())) {
      return mld_is_open(m, f.domain()) && cardinality(on_big) <= 1;
    }
    return cardinality(on_big) == 1 || on_big == m.big();
  }

  bool mld_image_realizable(Mld const& m, Subset x) {
    return is_subset(m.big(), x) || cardinality(x) <= m.d + 1;
  }

  KernelRealization mld_kernel_realizable(Mld const& m, Subset domain, Partition const& classes) {
    std::size_t const v = m.l + m.d;
    if (!mld_is_open(m, domain)) {
      throw Error(Errc::domain_not_open, format_subset(domain) + " is not open");
    }
    std::vector<int> class_of(v, -1);
    for (std::size_t c = 0; c < classes.classes.size(); ++c) {
      if (classes.classes[c].empty()) {
        throw Error(Errc::bad_params, "empty class");
      }
      for (Point p : classes.classes[c]) {
        if (p >= v || !contains(domain, p) || class_of[p] != -1) {
          throw Error(Errc::bad_params, "classes do not partition the domain");
        }
        class_of[p] = static_cast<int>(c);
      }
    }
    for_each_point(domain, [&](Point p) {
      if (class_of[p] == -1) {
        throw Error(Errc::bad_params, "classes do not partition the domain");
      }
    });
    std::set<int> big_classes;
    for_each_point(domain & m.big(), [&](Point p) { big_classes.insert(class_of[p]); });
    bool ok;
    if (is_subset(m.big(), domain)) {
      ok = big_classes.size() == 1 || big_classes.size() == m.l;
    } else {
      ok = big_classes.size() <= 1;
    }
    KernelRealization out;
    out.realizable = ok;
    if (ok) {
      // Each class goes to its least point; L comes first, so a class
      // meeting L is sent into L.
      std::vector<Point> t(v, PartialMap::undefined);
      for (auto const& c : classes.classes) {
        Point const rep = *std::min_element(c.begin(), c.end());
        for (Point p : c) {
          t[p] = rep;
        }
      }
      PartialMap e(v, v, std::move(t));
      if (!mld_membership(m, e) || !e.is_idempotent()) {
        throw Error(Errc::invariant_violation, "kernel witness is not an idempotent of W(l,d)");
      }
      out.idempotent = std::move(e);
    }
    return out;
  }

  bool mld_is_regular(Mld const& m, PartialMap const& f) {
    if (!mld_membership(m, f)) {
      throw Error(Errc::not_in_monoid, describe(f) + " is not in W(l,d)");
    }
    bool const permutes = is_subset(m.big(), f.domain()) && f.image_of(m.big()) == m.big();
    return permutes || cardinality(f.image() & m.big()) <= 1;
  }

  bool GreenwReport::pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](Clause const& c) { return c.pass; });
  }

  bool ComplexityReport::pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](Clause const& c) { return c.pass; });
  }

  GreenwReport verify_greenw(std::size_t l, std::size_t d, EnumerateOptions const& options) {
    Mld const          m = mld_design(l, d);
    WilsonMonoid const w = enumerate_wilson(m.design, options);
    FiniteMonoid const mon   = w.as_monoid();
    JClassPoset const  poset = green_relations(mon);
    auto const         regular_list = regular_elements(mon, poset);
    std::vector<bool>  regular(w.size(), false);
    for (Index i : regular_list) {
      regular[i] = true;
    }

    GreenwReport rep;
    rep.l                    = l;
    rep.d                    = d;
    rep.monoid_size          = w.size();
    rep.j_classes            = poset.classes.size();
    rep.non_regular_elements = w.size() - regular_list.size();

    // Closed-form regularity.
    {
      std::string witness;
      for (Index i = 0; i < w.size() && witness.empty(); ++i) {
        if (mld_is_regular(m, w.element(i)) != regular[i]) {
          witness = describe(w.element(i));
        }
      }
      rep.clauses.push_back(clause("regular elements match the closed form", witness.empty(), witness));
    }
    // (i) R by image, L by kernel on regular elements.
    {
      std::map<Subset, std::set<std::uint32_t>>        r_by_image;
      std::map<std::uint32_t, std::set<Subset>>        image_by_r;
      std::map<std::vector<std::vector<Point>>, std::set<std::uint32_t>> l_by_kernel;
      std::map<std::uint32_t, std::set<std::vector<std::vector<Point>>>> kernel_by_l;
      for (Index i : regular_list) {
        auto const& f = w.element(i);
        auto const  k = kernel(f).classes;
        r_by_image[f.image()].insert(poset.r_class[i]);
        image_by_r[poset.r_class[i]].insert(f.image());
        l_by_kernel[k].insert(poset.l_class[i]);
        kernel_by_l[poset.l_class[i]].insert(k);
      }
      auto one_to_one = [](auto const& a, auto const& b) {
        return std::all_of(a.begin(), a.end(), [](auto const& kv) { return kv.second.size() == 1; })
               && std::all_of(b.begin(), b.end(), [](auto const& kv) { return kv.second.size() == 1; });
      };
      rep.clauses.push_back(clause("(i) R-classes of regular elements are determined by image",
                                   one_to_one(r_by_image, image_by_r)));
      rep.clauses.push_back(clause("(i) L-classes of regular elements are determined by kernel",
                                   one_to_one(l_by_kernel, kernel_by_l)));
    }
    // (ii)-(iii) Roster of regular J-classes.
    std::map<std::string, std::uint32_t> class_of_label;
    {
      bool        ok = true;
      std::string detail;
      for (std::uint32_t c = 0; c < poset.classes.size(); ++c) {
        if (!poset.regular[c]) {
          continue;
        }
        std::set<std::string> labels;
        for (Index i : poset.classes[c]) {
          labels.insert(regular_label(m, w.element(i)));
        }
        if (labels.size() != 1 || class_of_label.contains(*labels.begin())) {
          ok     = false;
          detail = "class " + std::to_string(c) + " mixes or repeats labels";
          continue;
        }
        class_of_label[*labels.begin()] = c;
      }
      std::set<std::string> expected;
      for (std::size_t i = 0; i <= d + 1; ++i) {
        expected.insert("J_" + std::to_string(i));
      }
      for (std::size_t i = 0; i <= d; ++i) {
        expected.insert("J_L," + std::to_string(i));
      }
      std::set<std::string> found;
      for (auto const& [label, c] : class_of_label) {
        found.insert(label);
      }
      ok = ok && found == expected;
      rep.regular_j_classes = static_cast<std::size_t>(
          std::count(poset.regular.begin(), poset.regular.end(), true));
      rep.clauses.push_back(clause("(ii)-(iii) exactly 2d+3 regular J-classes J_0..J_{d+1}, J_L,0..J_L,d",
                                   ok && rep.regular_j_classes == 2 * d + 3,
                                   detail.empty() ? std::to_string(rep.regular_j_classes) + " regular classes"
                                                  : detail));
      // Each labelled class is exactly the set cut out by its formula.
      bool exact = true;
      for (Index i : regular_list) {
        auto const it = class_of_label.find(regular_label(m, w.element(i)));
        exact         = exact && it != class_of_label.end() && it->second == poset.j_class[i];
      }
      rep.clauses.push_back(clause("(ii)-(iii) each J-class is the set given by its image description", exact));
    }
    auto cls = [&](std::string const& label) -> std::optional<std::uint32_t> {
      auto it = class_of_label.find(label);
      if (it == class_of_label.end()) {
        return std::nullopt;
      }
      return it->second;
    };
    // (iv) Maximal subgroups.
    {
      bool        ok = true;
      std::string detail;
      auto check = [&](std::string const& label, std::size_t order, std::vector<std::size_t> factors) {
        auto c = cls(label);
        if (!c) {
          ok = false;
          return;
        }
        auto g = maximal_subgroup(mon, poset, *c);
        std::erase_if(factors, [](std::size_t f) { return f <= 1; });
        std::sort(factors.rbegin(), factors.rend());
        if (g.order != order || g.symmetric_factors != factors || !g.recognised) {
          ok = false;
          detail += label + " has " + g.name + " (order " + std::to_string(g.order) + "); ";
        }
        rep.regular.push_back(RegularClassInfo{label, poset.classes[*c].size(), g});
      };
      for (std::size_t i = 0; i <= d + 1; ++i) {
        check("J_" + std::to_string(i), factorial(i), {i});
      }
      for (std::size_t i = 0; i <= d; ++i) {
        check("J_L," + std::to_string(i), factorial(l) * factorial(i), {l, i});
      }
      rep.clauses.push_back(clause("(iv) maximal subgroups S_i and S_l x S_i", ok, detail));
    }
    // (v) The two chains.
    {
      bool ok = true;
      for (std::size_t i = 1; i <= d + 1; ++i) {
        auto a = cls("J_" + std::to_string(i - 1));
        auto b = cls("J_" + std::to_string(i));
        ok     = ok && a && b && *a != *b && poset.leq(*a, *b);
      }
      for (std::size_t i = 1; i <= d; ++i) {
        auto a = cls("J_L," + std::to_string(i - 1));
        auto b = cls("J_L," + std::to_string(i));
        ok     = ok && a && b && *a != *b && poset.leq(*a, *b);
      }
      rep.clauses.push_back(clause("(v) chains J_0 < ... < J_{d+1} (length d+2) and J_L,0 < ... < J_L,d (length d+1)", ok));
    }
    // (vi)-(vii) Covers in the poset of regular classes.
    {
      std::vector<std::uint32_t> reg;
      for (std::uint32_t c = 0; c < poset.classes.size(); ++c) {
        if (poset.regular[c]) {
          reg.push_back(c);
        }
      }
      auto regular_covers = [&](std::uint32_t a) {
        std::set<std::uint32_t> out;
        for (auto b : reg) {
          if (b == a || !poset.leq(b, a)) {
            continue;
          }
          bool between = std::any_of(reg.begin(), reg.end(), [&](std::uint32_t c) {
            return c != a && c != b && poset.leq(b, c) && poset.leq(c, a);
          });
          if (!between) {
            out.insert(b);
          }
        }
        return out;
      };
      bool        ok = true;
      std::string detail;
      for (std::size_t i = 0; i <= d; ++i) {
        auto a = cls("J_L," + std::to_string(i));
        if (!a) {
          ok = false;
          continue;
        }
        std::set<std::uint32_t> expected;
        if (i >= 1) {
          expected.insert(*cls("J_L," + std::to_string(i - 1)));
        }
        expected.insert(*cls("J_" + std::to_string(i + 1)));
        if (regular_covers(*a) != expected) {
          ok = false;
          detail += "J_L," + std::to_string(i) + " ";
        }
      }
      rep.clauses.push_back(clause("(vi) J_L,i covers exactly J_L,i-1 and J_{i+1}", ok, detail));
      ok = true;
      detail.clear();
      for (std::size_t i = 0; i <= d + 1; ++i) {
        auto a = cls("J_" + std::to_string(i));
        if (!a) {
          ok = false;
          continue;
        }
        std::set<std::uint32_t> expected;
        if (i >= 1) {
          expected.insert(*cls("J_" + std::to_string(i - 1)));
        }
        if (regular_covers(*a) != expected) {
          ok = false;
          detail += "J_" + std::to_string(i) + " ";
        }
      }
      auto const j0 = cls("J_0");
      bool const minimum
          = j0 && std::all_of(reg.begin(), reg.end(), [&](std::uint32_t c) { return poset.leq(*j0, c); });
      rep.clauses.push_back(clause("(vii) J_i covers exactly J_{i-1}; J_0 is the unique minimal class", ok && minimum,
                                   detail));
    }
    // (viii) Classes directly below the units, over all J-classes.
    {
      std::uint32_t const     units = poset.j_class[w.identity()];
      std::set<std::uint32_t> below(poset.lower_covers[units].begin(), poset.lower_covers[units].end());
      std::set<std::uint32_t> expected;
      auto                    a = cls("J_L," + std::to_string(d - 1));
      auto                    b = cls("J_" + std::to_string(d + 1));
      if (a && b) {
        expected = {*a, *b};
      }
      rep.clauses.push_back(clause("(viii) J_L,d-1 and J_{d+1} are the maximal classes below the units",
                                   !expected.empty() && below == expected && cls("J_L," + std::to_string(d)) == units,
                                   std::to_string(below.size()) + " classes directly below the units"));
    }
    // N = W minus {|f(L)| <= 1} is a regular submonoid and a union of J-classes.
    {
      std::vector<bool> in_n(w.size(), false);
      for (Index i = 0; i < w.size(); ++i) {
        in_n[i] = cardinality(w.element(i).image_of(m.big())) > 1;
      }
      bool ok = true;
      for (Index i = 0; i < w.size() && ok; ++i) {
        if (!in_n[i]) {
          continue;
        }
        ok = regular[i];
        for (Index j : poset.classes[poset.j_class[i]]) {
          ok = ok && in_n[j];
        }
        for (Index j = 0; j < w.size() && ok; ++j) {
          if (in_n[j]) {
            ok = in_n[w.product(i, j)];
          }
        }
      }
      rep.clauses.push_back(clause("N is a regular submonoid and a union of J-classes", ok));
    }
    // The non-regular example f(L) = {0}, f(D) = {1}.
    {
      std::vector<Point> t(l + d, 0);
      for (std::size_t p = l; p < l + d; ++p) {
        t[p] = 1;
      }
      PartialMap const f(l + d, l + d, std::move(t));
      auto const       idx = w.index_of(f);
      rep.clauses.push_back(
          clause("f(L) = {0}, f(D) = {1} lies in W(l,d) and is not regular", idx && !regular[*idx], describe(f)));
    }
    return rep;
  }

  ComplexityReport verify_complexity_lemmas(std::size_t l, std::size_t d, EnumerateOptions const& options) {
    Mld const          m   = mld_design(l, d);
    std::size_t const  v   = l + d;
    WilsonMonoid const w   = enumerate_wilson(m.design, options);
    FiniteMonoid const mon = w.as_monoid();
    JClassPoset const  poset = green_relations(mon);
    auto const         regular_list = regular_elements(mon, poset);
    std::vector<bool>  regular(w.size(), false);
    for (Index i : regular_list) {
      regular[i] = true;
    }

    ComplexityReport rep;
    rep.l           = l;
    rep.d           = d;
    rep.monoid_size = w.size();

    // e = identity on V minus the last point of D; it lies in J_{L,d-1}.
    std::vector<Point> et(v);
    for (Point p = 0; p < v; ++p) {
      et[p] = p;
    }
    et[v - 1]         = PartialMap::undefined;
    Index const e     = *w.index_of(PartialMap(v, v, et));
    auto const  k_vec = ideal_generated_by(mon, std::vector<Index>{e});
    std::vector<bool> in_k(w.size(), false);
    for (Index i : k_vec) {
      in_k[i] = true;
    }
    rep.ideal_size = k_vec.size();

    // (a) W/K is small with 0-minimal ideal from J_{d+1}.
    {
      bool        ok = true;
      std::string detail;
      for (Index i = 0; i < w.size(); ++i) {
        if (!regular[i] && !in_k[i]) {
          ok     = false;
          detail = "non-regular " + describe(w.element(i)) + " outside K";
          break;
        }
      }
      auto const q      = rees_quotient(mon, k_vec);
      auto const qposet = green_relations(q.monoid);
      auto const ideals = find_zero_minimal_ideals(q.monoid, qposet);
      std::size_t const units = qposet.classes[qposet.j_class[q.monoid.identity()]].size();
      bool              small = ideals.size() == 1 && ideals.front().zero_simple
                   && units + ideals.front().elements.size() == q.monoid.size();
      bool from_top = small;
      if (small) {
        for (Index x : ideals.front().elements) {
          if (x == *q.monoid.zero()) {
            continue;
          }
          auto const& f = w.element(q.from_quotient[x]);
          from_top      = from_top && f.rank() == d + 1 && cardinality(f.image() & m.big()) == 1;
        }
      }
      // Submonoid generated by the idempotents of W/K; every s has s^2 = s^3.
      std::vector<Index> idem = idempotents(q.monoid);
      std::vector<Index> sub{q.monoid.identity()};
      std::vector<bool>  seen(q.monoid.size(), false);
      seen[q.monoid.identity()] = true;
      for (std::size_t i = 0; i < sub.size(); ++i) {
        for (Index g : idem) {
          Index const y = q.monoid.product(sub[i], g);
          if (!seen[y]) {
            seen[y] = true;
            sub.push_back(y);
          }
        }
      }
      bool square_cube = true;
      for (Index s : sub) {
        Index const s2 = q.monoid.product(s, s);
        square_cube    = square_cube && q.monoid.product(s2, s) == s2;
      }
      bool const aperiodic = idempotent_generated_aperiodic(q.monoid, idem);
      rep.clauses.push_back(clause("(a) every non-regular element lies in K", ok, detail));
      rep.clauses.push_back(clause("(a) W/K is small with 0-minimal ideal from J_{d+1}", small && from_top,
                                   "|W/K| = " + std::to_string(q.monoid.size())));
      rep.clauses.push_back(clause("(a) idempotent-generated part of W/K is aperiodic with f^2 = f^3",
                                   aperiodic && square_cube,
                                   std::to_string(sub.size()) + " elements"));
    }
    if (d > 1) {
      // (b) eKe, restricted to the first v-1 points, is W(l, d-1).
      Mld const          smaller = mld_design(l, d - 1);
      WilsonMonoid const w2      = enumerate_wilson(smaller.design, options);
      std::set<Index>    eke;
      for (Index k : k_vec) {
        eke.insert(w.product(w.product(e, k), e));
      }
      bool inside = true;
      for (Index x : eke) {
        auto const& f = w.element(x);
        inside        = inside && !contains(f.domain(), static_cast<Point>(v - 1))
                 && !contains(f.image(), static_cast<Point>(v - 1));
      }
      std::set<PartialMap> images;
      for (Index x : eke) {
        images.insert(PartialMap(v - 1, v - 1, restrict_table(w.element(x), v - 1)));
      }
      std::set<PartialMap> target(w2.elements().begin(), w2.elements().end());
      bool                 bijective = images.size() == eke.size() && images == target;
      bool                 hom       = true;
      for (Index a : eke) {
        for (Index b : eke) {
          Index const ab = w.product(a, b);
          PartialMap  lhs(v - 1, v - 1, restrict_table(w.element(ab), v - 1));
          PartialMap  rhs = compose(PartialMap(v - 1, v - 1, restrict_table(w.element(a), v - 1)),
                                   PartialMap(v - 1, v - 1, restrict_table(w.element(b), v - 1)));
          hom = hom && eke.contains(ab) && lhs == rhs;
        }
      }
      rep.clauses.push_back(clause("(b) eKe elements have domain and image inside V minus the last point", inside));
      rep.clauses.push_back(clause("(b) restriction is an isomorphism eKe -> W(l,d-1)", bijective && hom,
                                   "|eKe| = " + std::to_string(eke.size()) + ", |W(l,d-1)| = "
                                       + std::to_string(w2.size())));
      // (c) K = KeK.
      std::set<Index> ek;
      for (Index k : k_vec) {
        ek.insert(w.product(e, k));
      }
      std::set<Index> kek;
      for (Index a : k_vec) {
        for (Index b : ek) {
          kek.insert(w.product(a, b));
        }
      }
      rep.clauses.push_back(clause("(c) K = KeK", kek == std::set<Index>(k_vec.begin(), k_vec.end()),
                                   "|K| = " + std::to_string(k_vec.size()) + ", |KeK| = " + std::to_string(kek.size())));
    } else {
      // d = 1: the complement I of G, J_L,0 and J_2 is an ideal and W/I has
      // exactly the two 0-minimal ideals J_L,0 + 0 and J_2 + 0.
      std::vector<Index> ideal;
      auto               label = [&](Index i) { return regular_label(m, w.element(i)); };
      std::uint32_t const units = poset.j_class[w.identity()];
      for (Index i = 0; i < w.size(); ++i) {
        bool const keep = poset.j_class[i] == units
                          || (regular[i] && (label(i) == "J_L,0" || label(i) == "J_2"));
        if (!keep) {
          ideal.push_back(i);
        }
      }
      bool ok = is_ideal(mon, ideal);
      if (ok) {
        auto const q      = rees_quotient(mon, ideal);
        auto const qposet = green_relations(q.monoid);
        auto const ideals = find_zero_minimal_ideals(q.monoid, qposet);
        std::set<std::string> found;
        std::size_t           covered = qposet.classes[qposet.j_class[q.monoid.identity()]].size() + 1;
        for (auto const& z : ideals) {
          std::set<std::string> labels;
          for (Index x : z.elements) {
            if (x != *q.monoid.zero()) {
              labels.insert(label(q.from_quotient[x]));
            }
          }
          if (labels.size() == 1) {
            found.insert(*labels.begin());
          }
          covered += z.elements.size() - 1;
        }
        ok = ideals.size() == 2 && found == std::set<std::string>{"J_L,0", "J_2"} && covered == q.monoid.size();
      }
      rep.clauses.push_back(clause("(d=1) W/I has the two 0-minimal ideals J_L,0 + 0 and J_2 + 0", ok));
    }
    // (d) Full transformation monoid on {0} + D embeds via f -> fbar.
    {
      std::vector<Point> pts{0};
      for (std::size_t p = l; p < v; ++p) {
        pts.push_back(static_cast<Point>(p));
      }
      std::size_t const        n = pts.size();
      std::vector<PartialMap>  full;
      std::vector<std::size_t> digits(n, 0);
      while (true) {
        std::vector<Point> t(n);
        for (std::size_t i = 0; i < n; ++i) {
          t[i] = static_cast<Point>(digits[i]);
        }
        full.emplace_back(n, n, std::move(t));
        std::size_t i = 0;
        while (i < n && ++digits[i] == n) {
          digits[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
      auto bar = [&](PartialMap const& f) {
        std::vector<Point> t(v);
        for (std::size_t p = 0; p < l; ++p) {
          t[p] = pts[f(0)];
        }
        for (std::size_t i = 1; i < n; ++i) {
          t[pts[i]] = pts[f(static_cast<Point>(i))];
        }
        return PartialMap(v, v, std::move(t));
      };
      bool            ok = true;
      std::set<Index> image;
      for (auto const& f : full) {
        auto const idx = w.index_of(bar(f));
        ok             = ok && idx.has_value();
        if (idx) {
          image.insert(*idx);
        }
      }
      ok = ok && image.size() == full.size();
      for (std::size_t a = 0; a < full.size() && ok; ++a) {
        for (std::size_t b = 0; b < full.size() && ok; ++b) {
          ok = bar(compose(full[a], full[b])) == compose(bar(full[a]), bar(full[b]));
        }
      }
      rep.clauses.push_back(clause("(d) the full transformation monoid on d+1 points embeds", ok,
                                   std::to_string(full.size()) + " maps"));
    }
    return rep;
  }

}  // namespace wilson

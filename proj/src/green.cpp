#include "wilson/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "wilson/error.hpp"

namespace wilson {

  namespace {

    constexpr std::size_t max_green_size  = 2'000'000;
    constexpr std::size_t max_table_size  = 4096;
    constexpr std::size_t max_direct_regular = 3000;

    struct TableHash {
      std::size_t operator()(std::vector<Point> const& t) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Point p : t) {
          h = (h ^ p) * 1099511628211ULL;
        }
        return h;
      }
    };

    // Strongly connected components of a graph whose edges out of x are
    // given by the rows of one or more adjacency arrays (n x k each).
    // Component ids follow Tarjan's emission order, so every edge goes from
    // a component to one with an id at most its own.
    std::vector<std::uint32_t> strongly_connected(std::size_t n, std::size_t k,
                                                  std::vector<std::vector<Index> const*> const& adj,
                                                  std::size_t& count) {
      constexpr std::uint32_t none = UINT32_MAX;
      std::vector<std::uint32_t> index(n, none);
      std::vector<std::uint32_t> low(n, 0);
      std::vector<std::uint32_t> comp(n, none);
      std::vector<Index>         stack;
      std::vector<bool>          on_stack(n, false);
      std::uint32_t              counter = 0;
      count                              = 0;
      std::size_t const edges_per_node   = k * adj.size();
      struct Frame {
        Index       node;
        std::size_t edge;
      };
      std::vector<Frame> call;
      auto               target = [&](Index x, std::size_t e) {
        return (*adj[e / k])[static_cast<std::size_t>(x) * k + e % k];
      };
      for (Index root = 0; root < n; ++root) {
        if (index[root] != none) {
          continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& fr = call.back();
          if (fr.edge < edges_per_node) {
            Index const w = target(fr.node, fr.edge++);
            if (index[w] == none) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              call.push_back({w, 0});
            } else if (on_stack[w]) {
              low[fr.node] = std::min(low[fr.node], index[w]);
            }
            continue;
          }
          Index const x = fr.node;
          if (low[x] == index[x]) {
            Index w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = static_cast<std::uint32_t>(count);
            } while (w != x);
            ++count;
          }
          call.pop_back();
          if (!call.empty()) {
            low[call.back().node] = std::min(low[call.back().node], low[x]);
          }
        }
      }
      return comp;
    }

    // Renumbers component ids by least member.
    std::vector<std::uint32_t> renumber_by_least(std::vector<std::uint32_t> const& comp, std::size_t count,
                                                 std::vector<std::uint32_t>& old_to_new) {
      old_to_new.assign(count, UINT32_MAX);
      std::uint32_t next = 0;
      for (auto c : comp) {
        if (old_to_new[c] == UINT32_MAX) {
          old_to_new[c] = next++;
        }
      }
      std::vector<std::uint32_t> out(comp.size());
      for (std::size_t i = 0; i < comp.size(); ++i) {
        out[i] = old_to_new[comp[i]];
      }
      return out;
    }

    std::vector<bool> membership(std::size_t n, std::span<Index const> set) {
      std::vector<bool> in(n, false);
      for (Index x : set) {
        if (x >= n) {
          throw Error(Errc::point_out_of_range, "element index out of range");
        }
        in[x] = true;
      }
      return in;
    }

    std::vector<Index> closure_from(FiniteMonoid const& m, std::vector<Index> seeds,
                                    std::vector<Index> const& right, std::vector<Index> const& left) {
      std::vector<bool> seen(m.size(), false);
      std::vector<Index> out;
      for (Index s : seeds) {
        if (!seen[s]) {
          seen[s] = true;
          out.push_back(s);
        }
      }
      for (std::size_t i = 0; i < out.size(); ++i) {
        Index const x = out[i];
        for (Index g : right) {
          Index const y = m.product(x, g);
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
        }
        for (Index g : left) {
          Index const y = m.product(g, x);
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::size_t factorial(std::size_t n) {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
      }
      return f;
    }

    // Every nontrivial normal subgroup is the whole group.
    bool is_simple_group(FiniteMonoid const& m, std::vector<Index> const& group, Index e) {
      if (group.size() <= 1) {
        return false;
      }
      std::unordered_map<Index, Index> inverse;
      for (Index g : group) {
        for (Index h : group) {
          if (m.product(g, h) == e) {
            inverse[g] = h;
            break;
          }
        }
      }
      for (Index x : group) {
        if (x == e) {
          continue;
        }
        std::unordered_set<Index> conj;
        for (Index g : group) {
          conj.insert(m.product(m.product(g, x), inverse.at(g)));
        }
        std::vector<Index>        sub{e};
        std::unordered_set<Index> seen{e};
        for (std::size_t i = 0; i < sub.size(); ++i) {
          for (Index c : conj) {
            Index const y = m.product(sub[i], c);
            if (seen.insert(y).second) {
              sub.push_back(y);
            }
          }
        }
        if (sub.size() != group.size()) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid::FiniteMonoid(std::size_t size, Index identity, Product product, std::optional<Index> zero)
      : _size(size), _identity(identity), _product(std::move(product)), _zero(zero) {
    if (size == 0 || identity >= size || (zero && *zero >= size)) {
      throw Error(Errc::bad_params, "monoid needs an identity inside 0..size-1");
    }
  }

  FiniteMonoid FiniteMonoid::from_table(std::size_t size, Index identity, std::vector<Index> table,
                                        std::optional<Index> zero) {
    if (table.size() != size * size) {
      throw Error(Errc::size_mismatch, "multiplication table must be size x size");
    }
    auto shared = std::make_shared<std::vector<Index> const>(std::move(table));
    return FiniteMonoid(
        size, identity, [shared, size](Index a, Index b) { return (*shared)[static_cast<std::size_t>(a) * size + b]; },
        zero);
  }

  FiniteMonoid FiniteMonoid::generated_by(std::vector<PartialMap> const& gens) {
    if (gens.empty()) {
      throw Error(Errc::bad_params, "need at least one generator");
    }
    std::size_t const n = gens.front().source_size();
    for (auto const& g : gens) {
      if (g.source_size() != n || g.target_size() != n) {
        throw Error(Errc::size_mismatch, "generators must be self-maps of one set");
      }
    }
    std::vector<PartialMap>                                            found{PartialMap::identity(n)};
    std::unordered_set<std::vector<Point>, TableHash> seen{found.front().table()};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto const& g : gens) {
        PartialMap y = compose(found[i], g);
        if (seen.insert(y.table()).second) {
          found.push_back(std::move(y));
          if (found.size() > max_green_size) {
            throw Error(Errc::too_large, "generated monoid exceeds the size cap");
          }
        }
      }
    }
    std::sort(found.begin(), found.end());
    auto maps  = std::make_shared<std::vector<PartialMap> const>(std::move(found));
    auto index = std::make_shared<std::unordered_map<std::vector<Point>, Index, TableHash>>();
    for (Index i = 0; i < maps->size(); ++i) {
      (*index)[(*maps)[i].table()] = i;
    }
    Index const          id = index->at(PartialMap::identity(n).table());
    std::optional<Index> zero;
    if (auto it = index->find(PartialMap::empty(n, n).table()); it != index->end()) {
      zero = it->second;
    }
    std::size_t const size = maps->size();
    FiniteMonoid      result = [&] {
      if (size <= max_table_size) {
        std::vector<Index> table(size * size);
        for (Index a = 0; a < size; ++a) {
          for (Index b = 0; b < size; ++b) {
            table[a * size + b] = index->at(compose((*maps)[a], (*maps)[b]).table());
          }
        }
        return from_table(size, id, std::move(table), zero);
      }
      return FiniteMonoid(
          size, id, [maps, index](Index a, Index b) { return index->at(compose((*maps)[a], (*maps)[b]).table()); },
          zero);
    }();
    result.set_maps(maps);
    return result;
  }

  void FiniteMonoid::set_maps(std::shared_ptr<std::vector<PartialMap> const> maps) {
    if (maps && maps->size() != _size) {
      throw Error(Errc::size_mismatch, "one map per element expected");
    }
    _maps = std::move(maps);
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<Index> generators(FiniteMonoid const& m) {
    std::size_t const  n = m.size();
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    if (m.map(0) != nullptr) {
      std::stable_sort(order.begin(), order.end(),
                       [&](Index a, Index b) { return m.map(a)->rank() > m.map(b)->rank(); });
    }
    std::vector<bool>  in(n, false);
    std::vector<Index> sub{m.identity()};
    std::vector<Index> gens;
    in[m.identity()] = true;
    for (Index c : order) {
      if (in[c]) {
        continue;
      }
      gens.push_back(c);
      std::size_t const old = sub.size();
      for (std::size_t i = 0; i < old; ++i) {
        Index const y = m.product(sub[i], c);
        if (!in[y]) {
          in[y] = true;
          sub.push_back(y);
        }
      }
      for (std::size_t i = old; i < sub.size(); ++i) {
        for (Index g : gens) {
          Index const y = m.product(sub[i], g);
          if (!in[y]) {
            in[y] = true;
            sub.push_back(y);
          }
        }
      }
    }
    return gens;
  }

  JClassPoset green_relations(FiniteMonoid const& m) {
    std::size_t const n = m.size();
    if (n > max_green_size) {
      throw Error(Errc::too_large, "monoid exceeds the Green analysis cap");
    }
    auto const        gens = generators(m);
    std::size_t const k    = std::max<std::size_t>(gens.size(), 1);
    std::vector<Index> right(n * k);
    std::vector<Index> left(n * k);
    for (Index x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        Index const g        = gens.empty() ? m.identity() : gens[i];
        right[x * k + i]     = m.product(x, g);
        left[x * k + i]      = m.product(g, x);
      }
    }
    JClassPoset               out;
    std::vector<std::uint32_t> scratch;
    std::size_t                count = 0;
    auto const r_raw = strongly_connected(n, k, {&right}, count);
    out.r_class      = renumber_by_least(r_raw, count, scratch);
    out.r_count      = count;
    auto const l_raw = strongly_connected(n, k, {&left}, count);
    out.l_class      = renumber_by_least(l_raw, count, scratch);
    out.l_count      = count;
    auto const raw = strongly_connected(n, k, {&right, &left}, count);
    std::vector<std::uint32_t> old_to_new;
    out.j_class = renumber_by_least(raw, count, old_to_new);
    std::size_t const c = count;
    out.classes.assign(c, {});
    for (Index x = 0; x < n; ++x) {
      out.classes[out.j_class[x]].push_back(x);
    }
    // Reachability in emission order: every successor has a smaller raw id.
    std::size_t const words = (c + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(c, std::vector<std::uint64_t>(words, 0));
    std::vector<std::vector<std::uint32_t>> succ(c);
    for (Index x = 0; x < n; ++x) {
      for (std::size_t i = 0; i < k; ++i) {
        for (Index y : {right[x * k + i], left[x * k + i]}) {
          if (raw[y] != raw[x]) {
            succ[raw[x]].push_back(raw[y]);
          }
        }
      }
    }
    for (std::uint32_t r = 0; r < c; ++r) {
      auto& row = reach[r];
      std::uint32_t const self = old_to_new[r];
      row[self / 64] |= std::uint64_t{1} << (self % 64);
      std::sort(succ[r].begin(), succ[r].end());
      succ[r].erase(std::unique(succ[r].begin(), succ[r].end()), succ[r].end());
      for (auto s : succ[r]) {
        for (std::size_t w = 0; w < words; ++w) {
          row[w] |= reach[s][w];
        }
      }
    }
    out.below.assign(c, {});
    for (std::uint32_t r = 0; r < c; ++r) {
      out.below[old_to_new[r]] = std::move(reach[r]);
    }
    out.lower_covers.assign(c, {});
    for (std::uint32_t a = 0; a < c; ++a) {
      std::vector<std::uint32_t> strict;
      for (std::uint32_t b = 0; b < c; ++b) {
        if (b != a && out.leq(b, a)) {
          strict.push_back(b);
        }
      }
      for (auto b : strict) {
        bool maximal = std::none_of(strict.begin(), strict.end(),
                                    [&](std::uint32_t e) { return e != b && out.leq(b, e); });
        if (maximal) {
          out.lower_covers[a].push_back(b);
        }
      }
    }
    out.idempotent.assign(n, false);
    out.regular.assign(c, false);
    for (Index x = 0; x < n; ++x) {
      if (m.product(x, x) == x) {
        out.idempotent[x]           = true;
        out.regular[out.j_class[x]] = true;
      }
    }
    return out;
  }

  std::vector<Index> idempotents(FiniteMonoid const& m) {
    std::vector<Index> out;
    for (Index x = 0; x < m.size(); ++x) {
      if (m.product(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Index> regular_elements(FiniteMonoid const& m, JClassPoset const& poset) {
    std::vector<Index> by_class;
    for (Index x = 0; x < m.size(); ++x) {
      if (poset.regular[poset.j_class[x]]) {
        by_class.push_back(x);
      }
    }
    if (m.size() > max_direct_regular) {
      return by_class;
    }
    std::vector<Index> direct;
    for (Index s = 0; s < m.size(); ++s) {
      for (Index t = 0; t < m.size(); ++t) {
        if (m.product(m.product(s, t), s) == s) {
          direct.push_back(s);
          break;
        }
      }
    }
    if (direct != by_class) {
      throw Error(Errc::invariant_violation, "regularity by s t s = s disagrees with the J-class criterion");
    }
    return direct;
  }

  GroupDescriptor maximal_subgroup(FiniteMonoid const& m, JClassPoset const& poset, std::size_t j_class) {
    if (j_class >= poset.classes.size() || !poset.regular[j_class]) {
      throw Error(Errc::not_regular_class, "J-class " + std::to_string(j_class) + " has no idempotent");
    }
    auto const& cls = poset.classes[j_class];
    Index const e   = *std::find_if(cls.begin(), cls.end(), [&](Index x) { return poset.idempotent[x]; });
    std::vector<Index> group;
    for (Index x : cls) {
      if (poset.r_class[x] == poset.r_class[e] && poset.l_class[x] == poset.l_class[e]) {
        group.push_back(x);
      }
    }
    GroupDescriptor d;
    d.order = group.size();
    if (PartialMap const* em = m.map(e); em != nullptr) {
      // Faithful action on the image of e by restriction.
      auto const         pts = members(em->image());
      std::vector<Point> parent(em->source_size());
      std::iota(parent.begin(), parent.end(), Point{0});
      auto find = [&](Point p) {
        while (parent[p] != p) {
          p = parent[p] = parent[parent[p]];
        }
        return p;
      };
      for (Index h : group) {
        PartialMap const& hm = *m.map(h);
        for (Point p : pts) {
          parent[find(p)] = find(hm(p));
        }
      }
      std::map<Point, std::size_t> orbit;
      for (Point p : pts) {
        ++orbit[find(p)];
      }
      std::size_t product = 1;
      for (auto const& [root, len] : orbit) {
        product *= factorial(len);
        if (len > 1) {
          d.symmetric_factors.push_back(len);
        }
      }
      std::sort(d.symmetric_factors.rbegin(), d.symmetric_factors.rend());
      d.recognised = product == d.order;
    } else if (d.order <= 2) {
      d.recognised = true;
      if (d.order == 2) {
        d.symmetric_factors = {2};
      }
    }
    if (d.recognised) {
      if (d.symmetric_factors.empty()) {
        d.name = "trivial";
      }
      for (std::size_t i = 0; i < d.symmetric_factors.size(); ++i) {
        d.name += (i == 0 ? "S" : " x S") + std::to_string(d.symmetric_factors[i]);
      }
    } else if (d.order == 168 && is_simple_group(m, group, e)) {
      d.recognised        = true;
      d.symmetric_factors = {};
      d.name              = "PSL(3,2)";
    } else {
      d.symmetric_factors = {};
      d.name              = "order " + std::to_string(d.order);
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and quotients
  ////////////////////////////////////////////////////////////////////////

  bool is_ideal(FiniteMonoid const& m, std::span<Index const> ideal) {
    auto const in   = membership(m.size(), ideal);
    auto const gens = generators(m);
    for (Index x : ideal) {
      for (Index g : gens) {
        if (!in[m.product(x, g)] || !in[m.product(g, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Index> ideal_generated_by(FiniteMonoid const& m, std::span<Index const> seeds) {
    auto const gens = generators(m);
    return closure_from(m, std::vector<Index>(seeds.begin(), seeds.end()), gens, gens);
  }

  ReesQuotient rees_quotient(FiniteMonoid const& m, std::span<Index const> ideal) {
    if (ideal.empty() || !is_ideal(m, ideal)) {
      throw Error(Errc::not_an_ideal, "subset is not a nonempty two-sided ideal");
    }
    auto const         in = membership(m.size(), ideal);
    ReesQuotient       q{FiniteMonoid(1, 0, [](Index, Index) { return Index{0}; }), {}, {}};
    auto               to   = std::make_shared<std::vector<Index>>(m.size());
    auto               from = std::make_shared<std::vector<Index>>();
    for (Index x = 0; x < m.size(); ++x) {
      if (!in[x]) {
        (*to)[x] = static_cast<Index>(from->size());
        from->push_back(x);
      }
    }
    Index const z = static_cast<Index>(from->size());
    Index       rep = ideal.front();
    if (m.zero() && in[*m.zero()]) {
      rep = *m.zero();
    }
    from->push_back(rep);
    for (Index x : ideal) {
      (*to)[x] = z;
    }
    FiniteMonoid base = m;
    FiniteMonoid quotient(
        from->size(), (*to)[m.identity()],
        [base, to, from, z](Index a, Index b) {
          if (a == z || b == z) {
            return z;
          }
          return (*to)[base.product((*from)[a], (*from)[b])];
        },
        z);
    if (m.map(0) != nullptr) {
      auto maps = std::make_shared<std::vector<PartialMap>>();
      for (Index old : *from) {
        maps->push_back(*m.map(old));
      }
      quotient.set_maps(std::move(maps));
    }
    q.monoid        = std::move(quotient);
    q.to_quotient   = *to;
    q.from_quotient = *from;
    return q;
  }

  bool is_prime_ideal(FiniteMonoid const& m, std::span<Index const> ideal) {
    if (!is_ideal(m, ideal)) {
      throw Error(Errc::not_an_ideal, "subset is not a two-sided ideal");
    }
    auto const         in = membership(m.size(), ideal);
    std::vector<Index> rest;
    for (Index x = 0; x < m.size(); ++x) {
      if (!in[x]) {
        rest.push_back(x);
      }
    }
    if (in[m.identity()]) {
      return false;
    }
    for (Index a : rest) {
      for (Index b : rest) {
        if (in[m.product(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool idempotent_generated_aperiodic(FiniteMonoid const& m, std::span<Index const> subset) {
    std::vector<Index> idem;
    for (Index x : subset) {
      if (m.product(x, x) == x) {
        idem.push_back(x);
      }
    }
    auto const sub = closure_from(m, {m.identity()}, idem, {});
    for (Index s : sub) {
      std::unordered_map<Index, std::size_t> first_seen;
      Index                                  x = s;
      for (std::size_t i = 1;; ++i) {
        auto [it, fresh] = first_seen.emplace(x, i);
        if (!fresh) {
          if (i - it->second != 1) {
            return false;
          }
          break;
        }
        x = m.product(x, s);
      }
    }
    return true;
  }

  std::vector<ZeroMinimalIdeal> find_zero_minimal_ideals(FiniteMonoid const& m, JClassPoset const& poset) {
    if (!m.zero()) {
      throw Error(Errc::no_zero, "monoid has no zero");
    }
    Index const                   zero = *m.zero();
    std::uint32_t const           zc   = poset.j_class[zero];
    std::vector<ZeroMinimalIdeal> out;
    for (std::uint32_t c = 0; c < poset.classes.size(); ++c) {
      if (c == zc) {
        continue;
      }
      auto const& lc = poset.lower_covers[c];
      if (lc.size() == 1 && lc.front() == zc) {
        ZeroMinimalIdeal ideal;
        ideal.elements = poset.classes[c];
        ideal.elements.push_back(zero);
        std::sort(ideal.elements.begin(), ideal.elements.end());
        ideal.zero_simple = poset.regular[c];
        out.push_back(std::move(ideal));
      }
    }
    return out;
  }

  FiniteMonoid partial_function_monoid(std::size_t n) {
    if (n == 0 || n > 4) {
      throw Error(Errc::too_large, "partial_function_monoid supports 1 to 4 points");
    }
    std::vector<PartialMap> all;
    std::size_t             total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n + 1;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Point> t(n);
      std::size_t        c = code;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t const d = c % (n + 1);
        c /= n + 1;
        t[i] = d == n ? PartialMap::undefined : static_cast<Point>(d);
      }
      all.emplace_back(n, n, std::move(t));
    }
    return FiniteMonoid::generated_by(all);
  }

}  // namespace wilson

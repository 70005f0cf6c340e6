#include "wilson/wmonoid.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "wilson/complex.hpp"
#include "wilson/error.hpp"
#include "wilson/search.hpp"

namespace wilson {

  namespace {

    constexpr std::size_t max_packed_points   = 15;
    constexpr std::size_t max_full_closure    = 5000;
    constexpr std::size_t closure_samples     = 200'000;
    constexpr std::size_t max_cached_table    = 2048;
    constexpr std::size_t max_hull_rows       = 8;
    constexpr std::uint64_t undefined_nibble  = 0xF;

    std::uint64_t pack(PartialMap const& f) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < f.source_size(); ++i) {
        std::uint64_t const nib = f.is_defined(static_cast<Point>(i)) ? f(static_cast<Point>(i)) : undefined_nibble;
        key |= nib << (4 * i);
      }
      return key;
    }

    // a after b on packed tables of n points.
    std::uint64_t compose_packed(std::uint64_t a, std::uint64_t b, std::size_t n) {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t const bi = (b >> (4 * i)) & 0xF;
        std::uint64_t const v  = bi == undefined_nibble ? undefined_nibble : (a >> (4 * bi)) & 0xF;
        out |= v << (4 * i);
      }
      return out;
    }

    template <typename Data>
    std::optional<Index> find_key(Data const& d, std::uint64_t key) {
      auto it = std::lower_bound(d.sorted_keys.begin(), d.sorted_keys.end(), std::make_pair(key, Index{0}));
      if (it == d.sorted_keys.end() || it->first != key) {
        return std::nullopt;
      }
      return it->second;
    }

    template <typename Data>
    Index product_of(Data const& d, Index a, Index b) {
      std::size_t const n = d.elements.size();
      if (!d.table.empty()) {
        return d.table[static_cast<std::size_t>(a) * n + b];
      }
      auto const r = find_key(d, compose_packed(d.keys[a], d.keys[b], d.design.size()));
      if (!r) {
        throw Error(Errc::invariant_violation, "W(X) is not closed under composition");
      }
      return *r;
    }

    struct IdealInfo {
      std::size_t units = 0;
      std::vector<ZeroMinimalIdeal> ideals;
    };

    IdealInfo ideal_info(WilsonMonoid const& w, FiniteMonoid const& m, JClassPoset const& poset) {
      IdealInfo info;
      info.units  = poset.classes[poset.j_class[w.identity()]].size();
      info.ideals = find_zero_minimal_ideals(m, poset);
      return info;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // WilsonMonoid
  ////////////////////////////////////////////////////////////////////////

  std::optional<Index> WilsonMonoid::index_of(PartialMap const& f) const {
    if (f.source_size() != design().size() || f.target_size() != design().size()) {
      return std::nullopt;
    }
    return find_key(*_data, pack(f));
  }

  Index WilsonMonoid::product(Index a, Index b) const {
    return product_of(*_data, a, b);
  }

  FiniteMonoid WilsonMonoid::as_monoid() const {
    auto         data = _data;
    FiniteMonoid m(
        size(), identity(), [data](Index a, Index b) { return product_of(*data, a, b); }, zero());
    m.set_maps(std::shared_ptr<std::vector<PartialMap> const>(_data, &_data->elements));
    return m;
  }

  WilsonMonoid enumerate_wilson(Pbd const& x, EnumerateOptions const& options) {
    std::size_t const v = x.size();
    if (v > options.max_points || v > max_packed_points) {
      throw Error(Errc::too_large, "W(X) enumeration is limited to "
                                       + std::to_string(std::min(options.max_points, max_packed_points))
                                       + " points, design has " + std::to_string(v));
    }
    auto data      = std::make_shared<WilsonMonoid::Data>(WilsonMonoid::Data{x, {}, {}, {}, {}, 0, 0});
    data->elements = all_morphisms(MorphismSearch(x, x), options.workers);
    std::size_t const n = data->elements.size();
    for (Index i = 0; i < n; ++i) {
      data->keys.push_back(pack(data->elements[i]));
      data->sorted_keys.emplace_back(data->keys.back(), i);
    }
    std::sort(data->sorted_keys.begin(), data->sorted_keys.end());
    auto const id   = find_key(*data, pack(PartialMap::identity(v)));
    auto const zero = find_key(*data, pack(PartialMap::empty(v, v)));
    if (!id || !zero) {
      throw Error(Errc::invariant_violation, "identity or empty map missing from W(X)");
    }
    data->identity = *id;
    data->zero     = *zero;

    auto check = [&](Index a, Index b) {
      auto const r = find_key(*data, compose_packed(data->keys[a], data->keys[b], v));
      if (!r) {
        throw Error(Errc::invariant_violation, "W(X) is not closed under composition");
      }
      return *r;
    };
    if (n <= max_full_closure) {
      bool const cache = n <= max_cached_table;
      if (cache) {
        data->table.resize(n * n);
      }
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          Index const r = check(a, b);
          if (cache) {
            data->table[static_cast<std::size_t>(a) * n + b] = r;
          }
        }
      }
    } else {
      std::mt19937_64                        rng(options.seed);
      std::uniform_int_distribution<Index>   pick(0, static_cast<Index>(n - 1));
      for (std::size_t s = 0; s < closure_samples; ++s) {
        check(pick(rng), pick(rng));
      }
    }
    return WilsonMonoid(std::move(data));
  }

  std::vector<Index> constant_ideal(WilsonMonoid const& w) {
    std::vector<Index> out;
    for (Index i = 0; i < w.size(); ++i) {
      if (w.element(i).rank() <= 1) {
        out.push_back(i);
      }
    }
    for (Index c : out) {
      for (Index a = 0; a < w.size(); ++a) {
        if (w.element(w.product(a, c)).rank() > 1 || w.element(w.product(c, a)).rank() > 1) {
          throw Error(Errc::invariant_violation, "partial constants do not form an ideal");
        }
      }
    }
    return out;
  }

  std::vector<Index> units(WilsonMonoid const& w) {
    std::vector<Index> out;
    for (Index i = 0; i < w.size(); ++i) {
      if (w.element(i).is_permutation()) {
        out.push_back(i);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix structure
  ////////////////////////////////////////////////////////////////////////

  bool ReesMatrix::is_reduced() const {
    std::set<std::vector<std::uint8_t>> row_set(entries.begin(), entries.end());
    if (row_set.size() != rows.size()) {
      return false;
    }
    std::set<std::vector<std::uint8_t>> col_set;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      std::vector<std::uint8_t> col;
      for (auto const& row : entries) {
        col.push_back(row[j]);
      }
      col_set.insert(std::move(col));
    }
    return col_set.size() == columns.size();
  }

  ReesMatrix rees_structure(Pbd const& x, bool allow_trivial) {
    if (x.is_degenerate() && !allow_trivial) {
      throw Error(Errc::trivial_pbd, "design has a single block");
    }
    std::size_t const v = x.size();
    ReesMatrix        r;
    for (Point p = 0; p < v; ++p) {
      r.rows.push_back(p);
    }
    for (Subset o : open_sets(x)) {
      if (o != 0) {
        r.columns.push_back(o);
      }
    }
    r.entries.assign(v, std::vector<std::uint8_t>(r.columns.size(), 0));
    for (Point p = 0; p < v; ++p) {
      for (std::size_t j = 0; j < r.columns.size(); ++j) {
        r.entries[p][j] = contains(r.columns[j], p) ? 1 : 0;
      }
    }
    // (p', O')(p, O) = (p', O) when p lies in O', otherwise the empty map.
    for (Point p2 = 0; p2 < v; ++p2) {
      for (Subset o2 : r.columns) {
        PartialMap const left = PartialMap::constant(v, v, o2, p2);
        for (Point p = 0; p < v; ++p) {
          for (Subset o : r.columns) {
            PartialMap const expected
                = contains(o2, p) ? PartialMap::constant(v, v, o, p2) : PartialMap::empty(v, v);
            if (compose(left, PartialMap::constant(v, v, o, p)) != expected) {
              throw Error(Errc::invariant_violation, "product rule of partial constants fails");
            }
          }
        }
      }
    }
    return r;
  }

  std::uint64_t translational_hull_size(ReesMatrix const& r) {
    if (!r.is_reduced()) {
      throw Error(Errc::not_reduced, "structure matrix has repeated rows or columns");
    }
    std::size_t const n = r.rows.size();
    std::size_t const c = r.columns.size();
    if (n > max_hull_rows) {
      throw Error(Errc::too_large, "translational hull count supports at most 8 rows");
    }
    // Row subsets that occur as a column.
    std::vector<bool> is_column(std::size_t{1} << n, false);
    for (std::size_t j = 0; j < c; ++j) {
      std::size_t mask = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (r.entries[i][j] != 0) {
          mask |= std::size_t{1} << i;
        }
      }
      is_column[mask] = true;
    }
    std::vector<std::vector<std::size_t>> row_cols(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (r.entries[i][j] != 0) {
          row_cols[i].push_back(j);
        }
      }
    }
    // lambda(i) in 0..n, where n means undefined. For each column O the
    // set {i : <O, lambda(i)> = 1} must be empty or itself a column.
    std::vector<std::size_t> lambda(n, 0);
    std::vector<std::size_t> pre(c);
    std::uint64_t            count = 0;
    while (true) {
      std::fill(pre.begin(), pre.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i] < n) {
          for (std::size_t j : row_cols[lambda[i]]) {
            pre[j] |= std::size_t{1} << i;
          }
        }
      }
      bool linked = std::all_of(pre.begin(), pre.end(), [&](std::size_t s) { return s == 0 || is_column[s]; });
      if (linked) {
        ++count;
      }
      std::size_t i = 0;
      while (i < n && ++lambda[i] > n) {
        lambda[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    return count;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure tests
  ////////////////////////////////////////////////////////////////////////

  bool is_ggm(WilsonMonoid const& w) {
    auto const m     = w.as_monoid();
    auto const poset = green_relations(m);
    auto const info  = ideal_info(w, m, poset);
    if (info.ideals.size() != 1 || !info.ideals.front().zero_simple) {
      return false;
    }
    auto const&                                ideal = info.ideals.front().elements;
    std::set<std::vector<Index>>               left;
    std::set<std::vector<Index>>               right;
    for (Index a = 0; a < w.size(); ++a) {
      std::vector<Index> l;
      std::vector<Index> r;
      for (Index i : ideal) {
        l.push_back(w.product(a, i));
        r.push_back(w.product(i, a));
      }
      left.insert(std::move(l));
      right.insert(std::move(r));
    }
    return left.size() == w.size() && right.size() == w.size();
  }

  bool is_small_monoid(WilsonMonoid const& w) {
    auto const m     = w.as_monoid();
    auto const poset = green_relations(m);
    auto const info  = ideal_info(w, m, poset);
    return info.ideals.size() == 1 && info.ideals.front().zero_simple
           && info.units + info.ideals.front().elements.size() == w.size();
  }

  std::optional<PartialMap> find_morphism_with_image(Pbd const& x, Subset y) {
    std::size_t const v = x.size();
    MorphismSearch    base(x, x);
    std::fill(base.allowed.begin(), base.allowed.end(), y);
    base.exact_image = y;
    if (!x.uniform_block_size() || cardinality(y) <= 1) {
      return find_morphism(base);
    }
    // Fibres of an element of W(X) are uniform here, so |Dom| = d |Y| for
    // an open domain.
    std::set<std::size_t> sizes;
    for (Subset o : open_sets(x)) {
      sizes.insert(cardinality(o));
    }
    std::size_t const k = cardinality(y);
    for (std::size_t s : sizes) {
      if (s < k || s % k != 0) {
        continue;
      }
      MorphismSearch query = base;
      query.fiber_cap      = s / k;
      query.max_undefined  = v - s;
      if (auto f = find_morphism(query)) {
        return f;
      }
    }
    return std::nullopt;
  }

  SmallnessCertificate is_small_by_images(Pbd const& x) {
    if (!x.uniform_block_size()) {
      throw Error(Errc::not_uniform, "image analysis needs a design with one block size");
    }
    SmallnessCertificate cert;
    std::size_t const    v = x.size();
    for (MooreFamily const fam = subsystems(x); Subset y : fam.members()) {
      std::size_t const k = cardinality(y);
      if (k <= 1 || k >= v) {
        continue;
      }
      ++cert.images_checked;
      if (auto f = find_morphism_with_image(x, y)) {
        cert.witness = std::move(f);
        return cert;
      }
    }
    cert.small = true;
    return cert;
  }

  std::optional<PartialMap> find_split_idempotent(Pbd const& x) {
    std::size_t const v = x.size();
    for (MooreFamily const fam = subsystems(x); Subset y : fam.members()) {
      std::size_t const k = cardinality(y);
      if (k <= 1 || k >= v) {
        continue;
      }
      MorphismSearch query(x, x);
      query.open_only        = true;
      query.exact_image      = y;
      query.may_be_undefined = full_set(v) & ~y;
      for (Point p = 0; p < v; ++p) {
        query.allowed[p] = contains(y, p) ? bit(p) : y;
      }
      if (auto e = find_morphism(query)) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<PartialMap> find_split_idempotent(WilsonMonoid const& w) {
    Pbd const&        x = w.design();
    std::size_t const v = x.size();
    for (auto const& e : w.elements()) {
      std::size_t const k = e.rank();
      if (!e.is_idempotent() || k <= 1 || k >= v) {
        continue;
      }
      if (is_subsystem(x, e.image()) && is_open_morphism(e, x, x)) {
        return e;
      }
    }
    return std::nullopt;
  }

  TheoremCheck image_of_idempotent_is_subsystem(WilsonMonoid const& w) {
    TheoremCheck out;
    auto const   m       = w.as_monoid();
    auto const   poset   = green_relations(m);
    auto const   regular = regular_elements(m, poset);
    std::vector<bool> check(w.size(), false);
    for (Index r : regular) {
      check[r] = true;
    }
    for (Index i = 0; i < w.size(); ++i) {
      if (poset.idempotent[i]) {
        check[i] = true;
      }
    }
    for (Index i = 0; i < w.size(); ++i) {
      if (!check[i]) {
        continue;
      }
      ++out.checked;
      if (!is_subsystem(w.design(), w.element(i).image())) {
        out.holds          = false;
        out.counterexample = w.element(i);
        return out;
      }
    }
    return out;
  }

}  // namespace wilson

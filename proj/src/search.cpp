#include "wilson/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wilson/error.hpp"

namespace wilson {

  MorphismSearch::MorphismSearch(Pbd const& src, Pbd const& tgt)
      : source(&src),
        target(&tgt),
        allowed(src.size(), full_set(tgt.size())),
        may_be_undefined(full_set(src.size())) {
    require_subset_capacity(src.size(), "MorphismSearch");
    require_subset_capacity(tgt.size(), "MorphismSearch");
  }

  namespace {

    constexpr Point U = PartialMap::undefined;

    class Searcher {
     public:
      Searcher(MorphismSearch const& query, std::function<bool(std::vector<Point> const&)> const& visit)
          : _query(query),
            _visit(visit),
            _v(query.source->size()),
            _w(query.target->size()),
            _value(_v, U),
            _fibre(_w, 0) {
        auto const& tb = query.target->blocks();
        _line.assign(_w * _w, 0);
        for (Point a = 0; a < _w; ++a) {
          for (Point b = 0; b < _w; ++b) {
            if (a != b) {
              _line[a * _w + b] = to_subset(tb[query.target->line_index(a, b)]);
            }
          }
        }
        choose_order();
      }

      void run() {
        descend(0);
      }

      Point first_point() const {
        return _order.front();
      }

     private:
      // Greedy order: each next point touches the most partly assigned blocks.
      void choose_order() {
        auto const&         blocks = _query.source->blocks();
        std::vector<bool>   placed(_v, false);
        std::vector<size_t> touched(blocks.size(), 0);
        std::size_t         start = 0;
        for (std::size_t i = 1; i < blocks.size(); ++i) {
          if (blocks[i].size() > blocks[start].size()) {
            start = i;
          }
        }
        Point first = blocks[start].front();
        for (std::size_t step = 0; step < _v; ++step) {
          Point best = first;
          if (step > 0) {
            long best_score = -1;
            for (Point p = 0; p < _v; ++p) {
              if (placed[p]) {
                continue;
              }
              long score = 0;
              for (auto bi : _query.source->blocks_through(p)) {
                score += static_cast<long>(touched[bi]);
              }
              if (score > best_score) {
                best_score = score;
                best       = p;
              }
            }
          }
          placed[best] = true;
          _order.push_back(best);
          for (auto bi : _query.source->blocks_through(best)) {
            ++touched[bi];
          }
        }
      }

      bool block_ok(Block const& b) const {
        Subset      vals    = 0;
        std::size_t defined = 0;
        std::size_t undef   = 0;
        bool        repeat  = false;
        for (Point q : b) {
          if (!contains(_assigned, q)) {
            continue;
          }
          Point const val = _value[q];
          if (val == U) {
            ++undef;
          } else {
            repeat = repeat || contains(vals, val);
            vals |= bit(val);
            ++defined;
          }
        }
        if (undef >= 2 && defined > 0) {
          return false;  // the undefined points must form a subsystem
        }
        if (cardinality(vals) >= 2) {
          if (undef > 0 || repeat) {
            return false;
          }
          Point const  a    = lowest(vals);
          Point const  c    = lowest(vals & (vals - 1));
          Subset const line = _line[a * _w + c];
          if (!is_subset(vals, line) || b.size() > cardinality(line)) {
            return false;
          }
          if (_query.open_only && b.size() != cardinality(line)) {
            return false;
          }
        }
        return true;
      }

      bool consistent(Point p) const {
        auto const& blocks = _query.source->blocks();
        for (auto bi : _query.source->blocks_through(p)) {
          if (!block_ok(blocks[bi])) {
            return false;
          }
        }
        return true;
      }

      // Returns false once the visitor asks to stop.
      bool descend(std::size_t depth) {
        if (depth == _v) {
          if (_query.exact_image) {
            Subset img = 0;
            for (Point q : _value) {
              if (q != U) {
                img |= bit(q);
              }
            }
            if (img != *_query.exact_image) {
              return true;
            }
          }
          return _visit(_value);
        }
        Point const p = _order[depth];
        _assigned |= bit(p);
        bool keep_going = true;
        for_each_point(_query.allowed[p], [&](Point val) {
          if (!keep_going || (_query.fiber_cap && _fibre[val] >= *_query.fiber_cap)) {
            return;
          }
          _value[p] = val;
          ++_fibre[val];
          if (consistent(p)) {
            keep_going = descend(depth + 1);
          }
          --_fibre[val];
        });
        if (keep_going && contains(_query.may_be_undefined, p)
            && (!_query.max_undefined || _undefined < *_query.max_undefined)) {
          _value[p] = U;
          ++_undefined;
          if (consistent(p)) {
            keep_going = descend(depth + 1);
          }
          --_undefined;
        }
        _value[p] = U;
        _assigned &= ~bit(p);
        return keep_going;
      }

      MorphismSearch const&                            _query;
      std::function<bool(std::vector<Point> const&)> const& _visit;
      std::size_t                                      _v;
      std::size_t                                      _w;
      std::vector<Point>                               _order;
      std::vector<Subset>                              _line;
      std::vector<Point>                               _value;
      std::vector<std::size_t>                         _fibre;
      std::size_t                                      _undefined = 0;
      Subset                                           _assigned  = 0;
    };

  }  // namespace

  void for_each_morphism(MorphismSearch const& query, std::function<bool(std::vector<Point> const&)> const& visit) {
    if (query.allowed.size() != query.source->size()) {
      throw Error(Errc::size_mismatch, "allowed values must be given for every source point");
    }
    Searcher(query, visit).run();
  }

  std::vector<PartialMap> all_morphisms(MorphismSearch const& query, unsigned workers) {
    auto const              v = query.source->size();
    auto const              w = query.target->size();
    std::vector<PartialMap> out;
    if (workers <= 1) {
      for_each_morphism(query, [&](std::vector<Point> const& t) {
        out.emplace_back(v, w, t);
        return true;
      });
    } else {
      // Split on the first point the search assigns.
      Point const first = Searcher(query, [](auto const&) { return true; }).first_point();
      std::vector<Point> branch = members(query.allowed[first]);
      if (contains(query.may_be_undefined, first)) {
        branch.push_back(U);
      }
      std::vector<std::vector<PartialMap>> parts(branch.size());
      std::atomic<std::size_t>             next{0};
      auto                                 work = [&] {
        for (std::size_t i = next++; i < branch.size(); i = next++) {
          MorphismSearch sub = query;
          if (branch[i] == U) {
            sub.allowed[first] = 0;
          } else {
            sub.allowed[first] = bit(branch[i]);
            sub.may_be_undefined &= ~bit(first);
          }
          for_each_morphism(sub, [&](std::vector<Point> const& t) {
            parts[i].emplace_back(v, w, t);
            return true;
          });
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) {
        t.join();
      }
      for (auto& part : parts) {
        out.insert(out.end(), part.begin(), part.end());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<PartialMap> find_morphism(MorphismSearch const& query) {
    std::optional<PartialMap> found;
    for_each_morphism(query, [&](std::vector<Point> const& t) {
      found.emplace(query.source->size(), query.target->size(), t);
      return false;
    });
    return found;
  }

}  // namespace wilson

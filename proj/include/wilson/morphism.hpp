#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <vector>

#include "wilson/complex.hpp"
#include "wilson/incidence.hpp"
#include "wilson/subset.hpp"

namespace wilson {

  //! A partial map from 0..source-1 to 0..target-1; undefined points hold
  //! the sentinel PartialMap::undefined.
  class PartialMap {
   public:
    static constexpr Point undefined = std::numeric_limits<Point>::max();

    //! Throws PointOutOfRange for values outside the target.
    PartialMap(std::size_t source, std::size_t target, std::vector<Point> table);

    static PartialMap identity(std::size_t n);
    static PartialMap empty(std::size_t source, std::size_t target);
    //! The partial constant with the given domain and value.
    static PartialMap constant(std::size_t source, std::size_t target, Subset domain, Point value);

    std::size_t source_size() const noexcept {
      return _table.size();
    }
    std::size_t target_size() const noexcept {
      return _target;
    }
    Point operator()(Point p) const {
      return _table[p];
    }
    bool is_defined(Point p) const {
      return _table[p] != undefined;
    }
    std::vector<Point> const& table() const noexcept {
      return _table;
    }

    Subset      domain() const;
    Subset      co_domain() const;
    Subset      image() const;
    std::size_t rank() const {
      return cardinality(image());
    }
    Subset preimage(Subset s) const;
    Subset image_of(Subset s) const;
    bool   is_permutation() const;
    bool   is_idempotent() const;

    friend bool operator==(PartialMap const&, PartialMap const&) = default;
    friend auto operator<=>(PartialMap const& a, PartialMap const& b) {
      if (auto c = a._target <=> b._target; c != 0) {
        return c;
      }
      return a._table <=> b._table;
    }

   private:
    std::size_t        _target;
    std::vector<Point> _table;
  };

  //! Classes in increasing order of their least element, each sorted.
  struct Partition {
    std::vector<std::vector<Point>> classes;

    friend bool operator==(Partition const&, Partition const&) = default;
  };

  //! The open sets of x: complements of subsystems, canonical order.
  std::vector<Subset> open_sets(Pbd const& x);
  bool                is_open(Pbd const& x, Subset s);

  //! f^{-1}(b) together with the points where f is undefined.
  Subset wilson_preimage(PartialMap const& f, Subset b);

  //! Domain is open and the preimage of every open set is open.
  bool is_morphism(PartialMap const& f, Pbd const& x, Pbd const& y);
  //! Domain is open; each block is collapsed to at most one point or mapped
  //! injectively, with no undefined points, into a block.
  bool is_morphism_blockwise(PartialMap const& f, Pbd const& x, Pbd const& y);
  //! Each block maps to at most one point or onto a block. Throws
  //! NotAMorphism; also checks that images of subsystems are subsystems and
  //! throws InvariantViolation if the two tests disagree.
  bool is_open_morphism(PartialMap const& f, Pbd const& x, Pbd const& y);

  //! Reusable checker with the open sets of both designs precomputed.
  class MorphismTester {
   public:
    MorphismTester(Pbd const& x, Pbd const& y);
    bool is_morphism(PartialMap const& f) const;

   private:
    std::vector<Subset> _x_open;
    std::vector<Subset> _y_open;
  };

  //! g after f. Throws SizeMismatch.
  PartialMap compose(PartialMap const& g, PartialMap const& f);
  Partition  kernel(PartialMap const& f);
  //! Common fibre size over the image, for a uniform source. Throws
  //! NotUniform, EmptyImage or NonUniformFibers.
  std::size_t degree(PartialMap const& f, Pbd const& x);

  //! GDD on f^{-1}(b): groups are the nonempty fibres, blocks the blocks of
  //! x inside f^{-1}(b) meeting each fibre at most once. points[i] is the
  //! point of x that GDD point i stands for.
  struct FiberGdd {
    std::vector<Point> points;
    Gdd                gdd;
  };
  //! Throws EmptyFiber or GDDAxiomViolation.
  FiberGdd fiber_gdd(PartialMap const& f, Pbd const& x, Pbd const& y, Subset b);

  //! From wilson_sts19(square) onto the trivial system on {0,1,2}: rows to
  //! 0, columns to 1, symbols to 2, undefined at the hub.
  PartialMap canonical_sts19_morphism(LatinSquare const& square);

}  // namespace wilson

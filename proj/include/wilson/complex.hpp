#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wilson/incidence.hpp"
#include "wilson/subset.hpp"

namespace wilson {

  //! A simplicial complex on the points 0..v-1 (v <= 64), stored by its
  //! facets. Constructing from any generating family keeps only the maximal
  //! sets; the empty complex is represented by the single facet {}.
  class SimplicialComplex {
   public:
    SimplicialComplex(std::size_t v, std::vector<Subset> generators);

    std::size_t size() const noexcept {
      return _v;
    }
    //! Facets in canonical order.
    std::vector<Subset> const& facets() const noexcept {
      return _facets;
    }
    bool contains(Subset face) const;

    //! Every face of size at most max_size, in canonical order.
    std::vector<Subset> faces(std::size_t max_size) const;

    friend bool operator==(SimplicialComplex const&, SimplicialComplex const&) = default;

   private:
    std::size_t         _v;
    std::vector<Subset> _facets;
  };

  //! An intersection-closed family containing the whole point set. The
  //! constructor checks both properties and throws InvariantViolation.
  class MooreFamily {
   public:
    MooreFamily(std::size_t v, std::vector<Subset> members);

    std::size_t size() const noexcept {
      return _v;
    }
    //! Members in canonical order, so the bottom comes first and V last.
    std::vector<Subset> const& members() const noexcept {
      return _members;
    }
    bool contains(Subset x) const;

    friend bool operator==(MooreFamily const&, MooreFamily const&) = default;

   private:
    std::size_t         _v;
    std::vector<Subset> _members;
  };

  //! The lattice of a Moore family under inclusion, with its cover relation.
  class LatticeView {
   public:
    explicit LatticeView(MooreFamily family);

    MooreFamily const& family() const noexcept {
      return _family;
    }
    std::size_t bottom() const noexcept {
      return 0;
    }
    std::size_t top() const noexcept {
      return _family.members().size() - 1;
    }
    //! Indices of the members covering member i.
    std::vector<std::size_t> const& upper_covers(std::size_t i) const {
      return _up[i];
    }
    bool covers(Subset upper, Subset lower) const;

    //! Lengths of the shortest and longest maximal chains.
    std::size_t min_chain_length() const noexcept {
      return _min_len;
    }
    std::size_t height() const noexcept {
      return _max_len;
    }

   private:
    MooreFamily                           _family;
    std::vector<std::vector<std::size_t>> _up;
    std::size_t                           _min_len = 0;
    std::size_t                           _max_len = 0;
  };

  std::size_t rank(SimplicialComplex const& s);
  bool        is_pure(SimplicialComplex const& s);
  //! Exhaustive exchange property check.
  bool is_matroid(SimplicialComplex const& s);

  //! Faces are all sets of size <= 2 and all non-collinear triples.
  SimplicialComplex matroid_from_pbd(Pbd const& x);
  //! Blocks are the closures of pairs. Throws NotSimpleRank3Matroid.
  Pbd pbd_from_matroid(SimplicialComplex const& m);

  //! The lattice of flats.
  MooreFamily flats(SimplicialComplex const& s);
  //! Intersection of the members containing x.
  Subset closure(MooreFamily const& f, Subset x);

  //! Partial transversals of successive differences of chains in f, up to
  //! the given size.
  SimplicialComplex transversals(MooreFamily const& f, std::size_t max_size);
  //! H = Tr(L(H)).
  bool              is_boolean_representable(SimplicialComplex const& s);
  SimplicialComplex truncate(SimplicialComplex const& s, std::size_t k);

  //! Sets X such that Y + p is a face for every face Y of X with |Y| < rank
  //! and every p outside X. Scans all subsets; at most 22 points.
  MooreFamily epsilon(SimplicialComplex const& s);

  bool   is_subsystem(Pbd const& x, Subset s);
  //! Smallest subsystem containing s.
  Subset subsystem_closure(Pbd const& x, Subset s);
  //! All pair-closed point sets.
  MooreFamily subsystems(Pbd const& x);
  //! Subsystems are only the empty set, points, blocks and V.
  bool        is_subsystem_free(Pbd const& x);

  //! Edges of K5 in lexicographic order (01, 02, ..., 34) with the spanning
  //! trees as facets.
  SimplicialComplex graphic_matroid_k5();
  //! Index of the edge {a, b} of K5 in graphic_matroid_k5.
  Point k5_edge(Point a, Point b);
  //! Adds the circuit-hyperplane x as a basis. Throws NotCircuitHyperplane.
  SimplicialComplex relax(SimplicialComplex const& m, Subset x);

  //! All maximal chains have the same length.
  bool is_graded_lattice(LatticeView const& lattice);
  //! chain starts at the bottom, ends at the top and each step is a cover.
  bool is_maximal_chain(LatticeView const& lattice, std::span<Subset const> chain);

}  // namespace wilson

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wilson/green.hpp"
#include "wilson/incidence.hpp"
#include "wilson/morphism.hpp"

namespace wilson {

  struct EnumerateOptions {
    std::size_t   max_points = 9;
    unsigned      workers    = 1;
    std::uint64_t seed       = 1;  //!< for the sampled closure check
  };

  //! All morphisms X -> X, sorted, with the product x * y = x after y.
  class WilsonMonoid {
   public:
    Pbd const& design() const noexcept {
      return _data->design;
    }
    std::size_t size() const noexcept {
      return _data->elements.size();
    }
    std::vector<PartialMap> const& elements() const noexcept {
      return _data->elements;
    }
    PartialMap const& element(Index i) const {
      return _data->elements[i];
    }
    Index identity() const noexcept {
      return _data->identity;
    }
    //! The empty map.
    Index zero() const noexcept {
      return _data->zero;
    }
    std::optional<Index> index_of(PartialMap const& f) const;
    Index                product(Index a, Index b) const;

    FiniteMonoid as_monoid() const;

   private:
    friend WilsonMonoid enumerate_wilson(Pbd const&, EnumerateOptions const&);

    struct Data {
      Pbd                                      design;
      std::vector<PartialMap>                  elements;
      std::vector<std::uint64_t>               keys;
      std::vector<std::pair<std::uint64_t, Index>> sorted_keys;
      std::vector<Index>                       table;  // empty unless cached
      Index                                    identity = 0;
      Index                                    zero     = 0;
    };

    explicit WilsonMonoid(std::shared_ptr<Data const> data) : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;
  };

  //! Pruned backtracking enumeration of W(X), followed by a closure check
  //! (exhaustive up to 5000 elements, sampled above). Throws TooLarge when
  //! the design has more than options.max_points points (hard limit 15).
  WilsonMonoid enumerate_wilson(Pbd const& x, EnumerateOptions const& options = {});

  //! Maps with image of size at most one; checked to be an ideal.
  std::vector<Index> constant_ideal(WilsonMonoid const& w);
  std::vector<Index> units(WilsonMonoid const& w);

  //! 0/1 matrix with rows the points and columns the nonempty open sets;
  //! entry 1 iff the point lies in the open set.
  struct ReesMatrix {
    std::vector<Point>                      rows;
    std::vector<Subset>                     columns;
    std::vector<std::vector<std::uint8_t>>  entries;  //!< entries[row][col]

    bool is_reduced() const;
  };

  //! Builds the structure matrix and checks the product rule of partial
  //! constants against composition. Throws TrivialPBD for a single-block
  //! design unless allow_trivial is set.
  ReesMatrix rees_structure(Pbd const& x, bool allow_trivial = false);

  //! Unique 0-minimal ideal, 0-simple, acted on faithfully from both sides.
  bool is_ggm(WilsonMonoid const& w);
  //! Number of linked pairs of partial maps on rows and columns. Throws
  //! NotReduced.
  std::uint64_t translational_hull_size(ReesMatrix const& r);

  //! Units together with a unique 0-minimal ideal that is 0-simple.
  bool is_small_monoid(WilsonMonoid const& w);

  //! A morphism X -> X with image exactly y, searched with the fibre
  //! constraints that hold for designs with one block size.
  std::optional<PartialMap> find_morphism_with_image(Pbd const& x, Subset y);

  //! For a design with one block size: W(X) is small iff no element has an
  //! image strictly between a point and X. Decided by targeted search over
  //! the proper subsystems without enumerating W(X).
  struct SmallnessCertificate {
    bool                      small = false;
    std::size_t               images_checked = 0;
    std::optional<PartialMap> witness;  //!< an element with a middle-sized image
  };
  SmallnessCertificate is_small_by_images(Pbd const& x);

  //! An open idempotent with image a subsystem Y, 1 < |Y| < |X|, found by
  //! targeted search over subsystems in canonical order.
  std::optional<PartialMap> find_split_idempotent(Pbd const& x);
  //! The same by scanning the idempotents of an enumerated monoid.
  std::optional<PartialMap> find_split_idempotent(WilsonMonoid const& w);

  struct TheoremCheck {
    bool                      holds = true;
    std::size_t               checked = 0;
    std::optional<PartialMap> counterexample;
  };
  //! Images of idempotents and of regular elements are subsystems.
  TheoremCheck image_of_idempotent_is_subsystem(WilsonMonoid const& w);

}  // namespace wilson

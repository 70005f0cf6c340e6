#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wilson/morphism.hpp"

namespace wilson {

  //! A finite monoid on the indices 0..size-1 with a product oracle.
  //! Optionally each element is realised as a partial self-map, with the
  //! product x * y equal to x after y; group recognition uses this.
  class FiniteMonoid {
   public:
    using Index   = std::uint32_t;
    using Product = std::function<Index(Index, Index)>;

    FiniteMonoid(std::size_t size, Index identity, Product product, std::optional<Index> zero = std::nullopt);
    //! Row-major multiplication table.
    static FiniteMonoid from_table(std::size_t size, Index identity, std::vector<Index> table,
                                   std::optional<Index> zero = std::nullopt);
    //! The monoid generated by the given maps under composition.
    static FiniteMonoid generated_by(std::vector<PartialMap> const& generators);

    std::size_t size() const noexcept {
      return _size;
    }
    Index identity() const noexcept {
      return _identity;
    }
    std::optional<Index> zero() const noexcept {
      return _zero;
    }
    Index product(Index a, Index b) const {
      return _product(a, b);
    }

    void set_maps(std::shared_ptr<std::vector<PartialMap> const> maps);
    //! Realisation of element i, or nullptr.
    PartialMap const* map(Index i) const {
      return _maps ? &(*_maps)[i] : nullptr;
    }

   private:
    std::size_t                                    _size;
    Index                                          _identity;
    Product                                        _product;
    std::optional<Index>                           _zero;
    std::shared_ptr<std::vector<PartialMap> const> _maps;
  };

  using Index = FiniteMonoid::Index;

  //! Green's relations of a finite monoid. J-classes are numbered by their
  //! least element; use leq for the order.
  struct JClassPoset {
    std::vector<std::vector<Index>>  classes;      //!< members, sorted
    std::vector<std::uint32_t>       j_class;      //!< element -> class
    std::vector<std::uint32_t>       r_class;      //!< element -> R-class id
    std::vector<std::uint32_t>       l_class;      //!< element -> L-class id
    std::size_t                      r_count = 0;
    std::size_t                      l_count = 0;
    std::vector<bool>                idempotent;   //!< per element
    std::vector<bool>                regular;      //!< per class
    std::vector<std::vector<std::uint32_t>> lower_covers;  //!< per class
    std::vector<std::vector<std::uint64_t>> below;         //!< reflexive, bit rows

    //! Class a lies at or below class b in the J-order.
    bool leq(std::size_t a, std::size_t b) const {
      return (below[b][a / 64] >> (a % 64)) & 1U;
    }
  };

  //! Generators found greedily; elements with larger image tried first when
  //! the monoid is realised by maps.
  std::vector<Index> generators(FiniteMonoid const& m);

  JClassPoset green_relations(FiniteMonoid const& m);

  std::vector<Index> idempotents(FiniteMonoid const& m);
  //! Elements s with s t s = s for some t. Small monoids are checked
  //! directly and against the J-class criterion; large ones use the latter.
  std::vector<Index> regular_elements(FiniteMonoid const& m, JClassPoset const& poset);

  struct GroupDescriptor {
    std::size_t              order = 0;
    std::string              name;             //!< "S3", "S4 x S2", "PSL(3,2)", "trivial", ...
    std::vector<std::size_t> symmetric_factors;  //!< degrees > 1, descending
    bool                     recognised = false;
  };

  //! The H-class of an idempotent in a regular J-class. Throws
  //! NotRegularClass.
  GroupDescriptor maximal_subgroup(FiniteMonoid const& m, JClassPoset const& poset, std::size_t j_class);

  struct ReesQuotient {
    FiniteMonoid       monoid;
    std::vector<Index> to_quotient;    //!< old index -> new index
    std::vector<Index> from_quotient;  //!< new index -> old index, zero maps to an ideal element
  };

  bool is_ideal(FiniteMonoid const& m, std::span<Index const> ideal);
  //! M I M.
  std::vector<Index> ideal_generated_by(FiniteMonoid const& m, std::span<Index const> seeds);
  //! Collapses the ideal to a zero. Throws NotAnIdeal.
  ReesQuotient rees_quotient(FiniteMonoid const& m, std::span<Index const> ideal);
  //! Proper ideal whose complement is a submonoid. Throws NotAnIdeal.
  bool is_prime_ideal(FiniteMonoid const& m, std::span<Index const> ideal);
  //! Every element of the submonoid generated by the idempotents in subset
  //! satisfies s^k = s^{k+1} for some k.
  bool idempotent_generated_aperiodic(FiniteMonoid const& m, std::span<Index const> subset);

  struct ZeroMinimalIdeal {
    std::vector<Index> elements;  //!< includes the zero
    bool               zero_simple = false;
  };
  //! Throws NoZero.
  std::vector<ZeroMinimalIdeal> find_zero_minimal_ideals(FiniteMonoid const& m, JClassPoset const& poset);

  //! All partial self-maps of n points under composition.
  FiniteMonoid partial_function_monoid(std::size_t n);

}  // namespace wilson

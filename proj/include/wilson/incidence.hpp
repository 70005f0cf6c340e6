#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wilson/subset.hpp"

namespace wilson {

  using Block = std::vector<Point>;  //!< sorted, no repeats

  //! A pairwise balanced design on the points 0..v-1: every pair of distinct
  //! points lies in exactly one block and every block has at least two
  //! points. Instances are only produced by validate_pbd, so they are always
  //! valid and immutable. Blocks are kept in lexicographic order.
  class Pbd {
   public:
    static constexpr std::uint32_t no_block = UINT32_MAX;

    std::size_t size() const noexcept {
      return _v;
    }

    std::vector<Block> const& blocks() const noexcept {
      return _blocks;
    }

    //! Index of the block through p and q (p != q).
    std::uint32_t line_index(Point p, Point q) const {
      return _line[static_cast<std::size_t>(p) * _v + q];
    }

    Block const& line(Point p, Point q) const {
      return _blocks[line_index(p, q)];
    }

    //! Indices of the blocks through p.
    std::vector<std::uint32_t> const& blocks_through(Point p) const {
      return _through[p];
    }

    //! Block i as a bit set; only available when size() <= 64.
    Subset block_set(std::size_t i) const;

    //! True for the degenerate designs admitted by allow_degenerate.
    bool is_degenerate() const noexcept;

    //! The common block size, if all blocks have the same size.
    std::optional<std::size_t> uniform_block_size() const;

    friend bool operator==(Pbd const& a, Pbd const& b) {
      return a._v == b._v && a._blocks == b._blocks;
    }

   private:
    friend Pbd validate_pbd(std::size_t, std::vector<Block>, bool);

    Pbd() = default;

    std::size_t                             _v = 0;
    std::vector<Block>                      _blocks;
    std::vector<std::uint32_t>              _line;
    std::vector<std::vector<std::uint32_t>> _through;
    std::vector<Subset>                     _block_sets;
  };

  //! Checks the PBD axioms and returns the canonical design. Throws
  //! PointOutOfRange, BlockTooSmall, PairDoubleCovered, PairUncovered or
  //! DegenerateCase. With allow_degenerate the single-block design on v >= 2
  //! points (for example the trivial system on three points) is accepted.
  Pbd validate_pbd(std::size_t v, std::vector<Block> blocks, bool allow_degenerate = false);

  //! The single block design (V, {V}); degenerate by definition.
  Pbd trivial_pbd(std::size_t v);

  //! Group divisible design: a partition of the points into groups and a set
  //! of blocks so that every pair lies in exactly one group or exactly one
  //! block, never both.
  struct Gdd {
    std::size_t        v = 0;
    std::vector<Block> groups;
    std::vector<Block> blocks;

    friend bool operator==(Gdd const&, Gdd const&) = default;
  };

  //! Throws GDDAxiomViolation on any failed axiom; returns the canonical form.
  Gdd validate_gdd(std::size_t v, std::vector<Block> groups, std::vector<Block> blocks);

  //! True if g is a TD(k, m): k groups of size m and every block of size k.
  bool is_transversal_design(Gdd const& g, std::size_t k, std::size_t m);

  //! Row-major m x m array on the symbols 0..m-1.
  class LatinSquare {
   public:
    //! Throws NotLatinSquare.
    LatinSquare(std::size_t order, std::vector<Point> cells);

    //! L(i, j) = i + j mod m.
    static LatinSquare cyclic(std::size_t order);

    std::size_t order() const noexcept {
      return _order;
    }
    Point operator()(std::size_t row, std::size_t col) const {
      return _cells[row * _order + col];
    }

   private:
    std::size_t        _order;
    std::vector<Point> _cells;
  };

  Pbd complete_graph(std::size_t n);
  //! Points 0..n; block {1..n} and the pairs {0, i}.
  Pbd near_pencil(std::size_t n);
  //! Points are normalised vectors of GF(q)^(n+1) in lexicographic order.
  Pbd projective_space(unsigned n, unsigned q);
  //! Points are vectors of GF(q)^n, point index = base-q digits, coordinate 0 lowest.
  Pbd affine_space(unsigned n, unsigned q);
  //! Six points, blocks {0,1,2}, {0,4,5}, {2,3,4} and the nine remaining pairs.
  Pbd hall_plane6();

  //! Rows 0..m-1, columns m..2m-1, symbols 2m..3m-1.
  Gdd td3_from_latin(LatinSquare const& square);
  //! Groups of size >= 2 become blocks.
  Pbd gdd_to_pbd(Gdd const& g);
  //! Inverse view: the listed blocks of x become groups, the rest stay
  //! blocks; points not covered by a listed block become singleton groups.
  Gdd gdd_from_pbd(Pbd const& x, std::span<Block const> group_blocks);

  //! Replaces block b of x with a copy of replacement; embedding[i] is the
  //! point of b that replacement point i becomes.
  Pbd break_block(Pbd const& x, Block const& b, Pbd const& replacement, std::span<Point const> embedding);

  //! gdd_to_pbd(td3_from_latin(cyclic 7)): a {3,7}-PBD on 21 points.
  Pbd pbd_z7();
  //! pbd_z7 with each 7-block replaced by a Fano plane.
  Pbd sts21();

  //! Layout of the 19-point system: rows 0..5, columns 6..11, symbols
  //! 12..17 and the hub 18.
  inline constexpr Point sts19_hub = 18;
  //! TD(3,6) from the square plus a Fano plane on each group with the hub.
  Pbd wilson_sts19(LatinSquare const& square);

  //! Develops the base blocks modulo v.
  Pbd cyclic_sts(std::size_t v, std::vector<Block> const& base_blocks);

  //! Points are relabelled p -> perm[p].
  Pbd relabel(Pbd const& x, std::span<Point const> perm);

  //! v - 1 = 0 mod gcd(k - 1) and v(v - 1) = 0 mod gcd(k(k - 1)) over k in ks.
  bool necessary_conditions(std::span<std::size_t const> ks, std::size_t v);

  //! For a uniform design with block size k: whether a proper subsystem of
  //! order u is allowed by v >= (k - 1)u + 1. Throws NotUniform.
  bool subsystem_bound_check(Pbd const& x, std::size_t u);

}  // namespace wilson

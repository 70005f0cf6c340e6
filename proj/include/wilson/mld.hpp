#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wilson/incidence.hpp"
#include "wilson/morphism.hpp"
#include "wilson/wmonoid.hpp"

namespace wilson {

  //! The design M(l, d): L = {0..l-1} is a block and every other pair is a
  //! 2-block; D = {l..l+d-1}.
  struct Mld {
    std::size_t l;
    std::size_t d;
    Pbd         design;

    Subset big() const {
      return full_set(l);
    }
    Subset rest() const {
      return full_set(l + d) & ~full_set(l);
    }
  };

  //! Throws BadParams unless l >= 3 and d >= 1.
  Mld mld_design(std::size_t l, std::size_t d);

  //! L inside X, or |L and X| <= 1.
  bool mld_is_subsystem(Mld const& m, Subset x);
  //! X inside D, or |L and X| >= l - 1.
  bool mld_is_open(Mld const& m, Subset x);
  //! Closed-form membership in W(l, d).
  bool mld_membership(Mld const& m, PartialMap const& f);
  //! Some element has image X: L inside X or |X| <= d + 1.
  bool mld_image_realizable(Mld const& m, Subset x);

  struct KernelRealization {
    bool                      realizable = false;
    std::optional<PartialMap> idempotent;  //!< witness with this kernel
  };
  //! Whether some element has domain `domain` and kernel `classes`, with an
  //! idempotent witness. Throws DomainNotOpen or BadParams.
  KernelRealization mld_kernel_realizable(Mld const& m, Subset domain, Partition const& classes);

  //! f restricted to L permutes L, or |Im f and L| <= 1. Throws NotInMonoid.
  bool mld_is_regular(Mld const& m, PartialMap const& f);

  struct Clause {
    std::string name;
    bool        pass = false;
    std::string detail;
  };

  struct RegularClassInfo {
    std::string     label;  //!< "J_i" or "J_L,i"
    std::size_t     size = 0;
    GroupDescriptor group;
  };

  struct GreenwReport {
    std::size_t                   l = 0;
    std::size_t                   d = 0;
    std::size_t                   monoid_size = 0;
    std::size_t                   j_classes = 0;
    std::size_t                   regular_j_classes = 0;
    std::size_t                   non_regular_elements = 0;
    std::vector<RegularClassInfo> regular;
    std::vector<Clause>           clauses;

    bool pass() const;
  };

  //! Checks the Green structure of W(l, d) against an enumeration.
  GreenwReport verify_greenw(std::size_t l, std::size_t d, EnumerateOptions const& options = {});

  struct ComplexityReport {
    std::size_t         l = 0;
    std::size_t         d = 0;
    std::size_t         monoid_size = 0;
    std::size_t         ideal_size = 0;  //!< |K|
    std::vector<Clause> clauses;

    bool pass() const;
  };

  //! K = ideal generated by J_{L,d-1}; W/K small with aperiodic idempotent
  //! part; eKe = W(l, d-1) (d > 1); K = KeK (d > 1); T_{d+1} embeds.
  ComplexityReport verify_complexity_lemmas(std::size_t l, std::size_t d, EnumerateOptions const& options = {});

}  // namespace wilson

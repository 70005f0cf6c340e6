#pragma once

#include <cstdint>
#include <vector>

namespace wilson {

  //! Finite field GF(q) by lookup tables. Supported orders are primes below
  //! 256 and the prime powers 4, 8 and 9; anything else throws
  //! UnsupportedField. Elements are 0..q-1 with 0 and 1 the field identities.
  class GaloisField {
   public:
    explicit GaloisField(unsigned q);

    unsigned order() const noexcept {
      return _q;
    }
    unsigned characteristic() const noexcept {
      return _p;
    }

    unsigned add(unsigned a, unsigned b) const {
      return _add[a * _q + b];
    }
    unsigned mul(unsigned a, unsigned b) const {
      return _mul[a * _q + b];
    }
    unsigned neg(unsigned a) const {
      return _neg[a];
    }
    unsigned sub(unsigned a, unsigned b) const {
      return add(a, neg(b));
    }
    //! Multiplicative inverse; a must be nonzero.
    unsigned inv(unsigned a) const {
      return _inv[a];
    }

   private:
    unsigned                  _q;
    unsigned                  _p;
    std::vector<std::uint8_t> _add;
    std::vector<std::uint8_t> _mul;
    std::vector<std::uint8_t> _neg;
    std::vector<std::uint8_t> _inv;
  };

}  // namespace wilson

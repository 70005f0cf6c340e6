#include "wilson/galois_field.hpp"

#include <array>
#include <string>

#include "wilson/error.hpp"

namespace wilson {

  namespace {

    bool is_prime(unsigned n) {
      if (n < 2) {
        return false;
      }
      for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    struct Extension {
      unsigned q;
      unsigned p;
      unsigned degree;
      // Monic irreducible modulus, low coefficient first, leading 1 omitted.
      std::array<unsigned, 3> low;
    };

    // x^2+x+1 over GF(2), x^3+x+1 over GF(2), x^2+1 over GF(3).
    constexpr std::array<Extension, 3> extensions{{{4, 2, 2, {1, 1, 0}},
                                                   {8, 2, 3, {1, 1, 0}},
                                                   {9, 3, 2, {1, 0, 0}}}};

    std::vector<unsigned> digits(unsigned x, unsigned p, unsigned n) {
      std::vector<unsigned> d(n);
      for (unsigned i = 0; i < n; ++i) {
        d[i] = x % p;
        x /= p;
      }
      return d;
    }

    unsigned undigits(std::vector<unsigned> const& d, unsigned p) {
      unsigned x = 0;
      for (auto it = d.rbegin(); it != d.rend(); ++it) {
        x = x * p + *it;
      }
      return x;
    }

    unsigned poly_mul(unsigned a, unsigned b, Extension const& ext) {
      auto const            da = digits(a, ext.p, ext.degree);
      auto const            db = digits(b, ext.p, ext.degree);
      std::vector<unsigned> prod(2 * ext.degree - 1, 0);
      for (unsigned i = 0; i < ext.degree; ++i) {
        for (unsigned j = 0; j < ext.degree; ++j) {
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % ext.p;
        }
      }
      // Reduce using x^n = -(low part).
      for (unsigned k = static_cast<unsigned>(prod.size()); k-- > ext.degree;) {
        unsigned const c = prod[k];
        if (c == 0) {
          continue;
        }
        prod[k] = 0;
        for (unsigned i = 0; i < ext.degree; ++i) {
          unsigned const sub = (c * ext.low[i]) % ext.p;
          prod[k - ext.degree + i] = (prod[k - ext.degree + i] + ext.p - sub) % ext.p;
        }
      }
      prod.resize(ext.degree);
      return undigits(prod, ext.p);
    }

  }  // namespace

  GaloisField::GaloisField(unsigned q) : _q(q), _p(q) {
    Extension const* ext = nullptr;
    for (auto const& e : extensions) {
      if (e.q == q) {
        ext = &e;
      }
    }
    if (ext == nullptr && !(is_prime(q) && q < 256)) {
      throw Error(Errc::unsupported_field,
                  "GF(" + std::to_string(q) + ") is not available; use a prime below 256 or 4, 8, 9");
    }
    _add.resize(q * q);
    _mul.resize(q * q);
    _neg.resize(q);
    _inv.assign(q, 0);
    if (ext == nullptr) {
      for (unsigned a = 0; a < q; ++a) {
        for (unsigned b = 0; b < q; ++b) {
          _add[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
          _mul[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
        }
      }
    } else {
      _p = ext->p;
      for (unsigned a = 0; a < q; ++a) {
        auto const da = digits(a, ext->p, ext->degree);
        for (unsigned b = 0; b < q; ++b) {
          auto const            db = digits(b, ext->p, ext->degree);
          std::vector<unsigned> sum(ext->degree);
          for (unsigned i = 0; i < ext->degree; ++i) {
            sum[i] = (da[i] + db[i]) % ext->p;
          }
          _add[a * q + b] = static_cast<std::uint8_t>(undigits(sum, ext->p));
          _mul[a * q + b] = static_cast<std::uint8_t>(poly_mul(a, b, *ext));
        }
      }
    }
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        if (_add[a * q + b] == 0) {
          _neg[a] = static_cast<std::uint8_t>(b);
        }
        if (_mul[a * q + b] == 1) {
          _inv[a] = static_cast<std::uint8_t>(b);
        }
      }
    }
  }

}  // namespace wilson

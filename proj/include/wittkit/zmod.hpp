#pragma once

#include <cstdint>

#include "wittkit/errors.hpp"

namespace wittkit {

/// Arithmetic context for the local ring Z/p^e, entries kept as reduced
/// machine-word residues. Moduli above 2^62 are rejected at construction.
struct ZmodCtx {
  uint64_t p = 0;
  uint32_t e = 0;
  uint64_t q = 0;  // p^e

  ZmodCtx() = default;
  ZmodCtx(uint64_t p_, uint32_t e_) : p(p_), e(e_) {
    if (p_ < 2 || e_ == 0) throw config_invalid("ZmodCtx: need p >= 2, e >= 1");
    q = 1;
    for (uint32_t i = 0; i < e_; ++i) {
      if (q > (uint64_t(1) << 62) / p_) throw config_invalid("ZmodCtx: p^e exceeds 2^62");
      q *= p_;
    }
  }

  bool operator==(const ZmodCtx& o) const { return p == o.p && e == o.e; }

  uint64_t reduce_i64(int64_t v) const {
    int64_t r = v % int64_t(q);
    if (r < 0) r += int64_t(q);
    return uint64_t(r);
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= q ? s - q : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + q - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : q - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return uint64_t((__uint128_t)a * b % q);
  }
  uint64_t pow(uint64_t a, uint64_t k) const {
    uint64_t r = 1 % q;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  /// p-adic valuation of a residue; val(0) = e by convention.
  uint32_t val(uint64_t a) const {
    if (a == 0) return e;
    uint32_t v = 0;
    while (a % p == 0) {
      a /= p;
      ++v;
    }
    return v;
  }
  /// p^k as an integer, capped at q = p^e (so ppow_int(e) == q).
  uint64_t ppow_int(uint32_t k) const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < k && i < e; ++i) r *= p;
    return r;
  }
  /// p^k as a ring element (0 once k >= e).
  uint64_t ppow(uint32_t k) const { return k >= e ? 0 : ppow_int(k); }
  uint64_t unit_part(uint64_t a) const {
    if (a == 0) return 1;
    while (a % p == 0) a /= p;
    return a;
  }
  /// Inverse of a unit (a not divisible by p), by lifting-the-exponent on
  /// the mod-p inverse.
  uint64_t inv_unit(uint64_t a) const {
    if (a % p == 0) throw not_divisible("inv_unit: argument is not a unit");
    // Newton iteration: x <- x(2 - ax) doubles precision per step.
    uint64_t x = pow_mod_p(a % p);
    uint64_t prec = p;
    while (prec < q) {
      prec = (prec > (uint64_t(1) << 31)) ? q : prec * prec;
      x = mul(x, sub(2 % q, mul(a, x)));
    }
    return x;
  }

 private:
  uint64_t pow_mod_p(uint64_t a) const {
    // a^(p-2) mod p
    uint64_t r = 1, b = a % p, k = p - 2;
    while (k) {
      if (k & 1) r = (__uint128_t)r * b % p;
      b = (__uint128_t)b * b % p;
      k >>= 1;
    }
    return r;
  }
};

}  // namespace wittkit

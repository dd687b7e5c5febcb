#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "wittkit/zmod.hpp"

namespace wittkit {

using BigInt = boost::multiprecision::cpp_int;
using Mono = std::vector<uint32_t>;  // exponent vector, length = nvars

inline uint32_t mono_degree(const Mono& m) {
  uint32_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}
inline Mono mono_add(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Sparse multivariate polynomial with integer coefficients; the workhorse
/// for the universal Witt polynomials (exact, unbounded coefficients).
struct BPoly {
  uint32_t nvars = 0;
  std::map<Mono, BigInt> t;

  static BPoly zero(uint32_t nv) { return BPoly{nv, {}}; }
  static BPoly constant(uint32_t nv, BigInt c);
  static BPoly variable(uint32_t nv, uint32_t i, uint32_t e = 1);
  bool operator==(const BPoly& o) const { return nvars == o.nvars && t == o.t; }
};

BPoly badd(const BPoly& a, const BPoly& b);
BPoly bsub(const BPoly& a, const BPoly& b);
BPoly bmul(const BPoly& a, const BPoly& b);
BPoly bscale(const BPoly& a, const BigInt& c);
BPoly bpow(const BPoly& a, uint64_t k);
/// Exact division by the integer c; throws not_in_image if any coefficient
/// is not divisible.
BPoly bdiv_exact(const BPoly& a, const BigInt& c);

/// Sparse multivariate polynomial over Z/p^e with a hard total-degree
/// truncation bound; operations that would overflow the bound throw
/// truncation_overflow rather than silently truncating.
struct ZPoly {
  ZmodCtx c;
  uint32_t nvars = 0;
  uint32_t bound = 0;
  std::map<Mono, uint64_t> t;

  static ZPoly zero(ZmodCtx c, uint32_t nv, uint32_t bound);
  static ZPoly constant(ZmodCtx c, uint32_t nv, uint32_t bound, uint64_t v);
  static ZPoly variable(ZmodCtx c, uint32_t nv, uint32_t bound, uint32_t i, uint32_t e = 1);
  static ZPoly monomial(ZmodCtx c, uint32_t nv, uint32_t bound, const Mono& m, uint64_t v);

  bool is_zero() const { return t.empty(); }
  uint32_t degree() const;  // total degree; 0 for the zero polynomial
  bool operator==(const ZPoly& o) const { return t == o.t; }
  bool operator!=(const ZPoly& o) const { return !(*this == o); }
};

ZPoly padd(const ZPoly& a, const ZPoly& b);
ZPoly psub(const ZPoly& a, const ZPoly& b);
ZPoly pneg(const ZPoly& a);
ZPoly pmul(const ZPoly& a, const ZPoly& b);
ZPoly pscale(const ZPoly& a, uint64_t c);
ZPoly ppow(const ZPoly& a, uint64_t k);
ZPoly pderiv(const ZPoly& a, uint32_t var);

/// Coefficient-ring contexts for the generic Witt arithmetic.
struct BigIntRing {
  using Elem = BigInt;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_bigint(const BigInt& c) const { return c; }
  Elem from_int(int64_t v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem pow(Elem a, uint64_t k) const;
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  uint64_t characteristic() const { return 0; }
};

struct ZmodRing {
  ZmodCtx c;
  using Elem = uint64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % c.q; }
  Elem from_bigint(const BigInt& v) const;
  Elem from_int(int64_t v) const { return c.reduce_i64(v); }
  Elem add(Elem a, Elem b) const { return c.add(a, b); }
  Elem sub(Elem a, Elem b) const { return c.sub(a, b); }
  Elem mul(Elem a, Elem b) const { return c.mul(a, b); }
  Elem neg(Elem a) const { return c.neg(a); }
  Elem pow(Elem a, uint64_t k) const { return c.pow(a, k); }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  uint64_t characteristic() const { return c.e == 1 ? c.p : 0; }
};

struct ZPolyRing {
  ZmodCtx c;
  uint32_t nvars = 0;
  uint32_t bound = 0;
  using Elem = ZPoly;
  Elem zero() const { return ZPoly::zero(c, nvars, bound); }
  Elem one() const { return ZPoly::constant(c, nvars, bound, 1); }
  Elem from_bigint(const BigInt& v) const;
  Elem from_int(int64_t v) const { return ZPoly::constant(c, nvars, bound, c.reduce_i64(v)); }
  Elem var(uint32_t i, uint32_t e = 1) const { return ZPoly::variable(c, nvars, bound, i, e); }
  Elem add(const Elem& a, const Elem& b) const { return padd(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return psub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return pmul(a, b); }
  Elem neg(const Elem& a) const { return pneg(a); }
  Elem pow(const Elem& a, uint64_t k) const { return ppow(a, k); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  uint64_t characteristic() const { return c.e == 1 ? c.p : 0; }
};

}  // namespace wittkit

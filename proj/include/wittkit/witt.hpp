#pragma once

#include <memory>
#include <vector>

#include "wittkit/errors.hpp"
#include "wittkit/mpoly.hpp"

namespace wittkit {

/// Universal polynomials of p-typical Witt arithmetic for a fixed (p, n),
/// computed once over the integers by the ghost recursion. Sum/prod/neg
/// polynomials live in 2n variables x_0..x_{n-1}, y_0..y_{n-1} (y-block
/// unused by neg); frobenius polynomials in the n x-variables.
struct WittPolys {
  uint64_t p = 0;
  uint32_t n = 0;
  std::vector<BPoly> sum, prod, neg;   // n components each
  std::vector<BPoly> frob;             // n-1 components
};

/// Ghost-recursion construction, cached per (p, n); n <= 8.
const WittPolys& witt_universal_polynomials(uint64_t p, uint32_t n);

/// Ghost components over the integers: w_i(a) = sum_{j<=i} p^j a_j^{p^(i-j)}.
std::vector<BigInt> ghost(uint64_t p, const std::vector<BigInt>& a);
/// Inverse of ghost where defined; throws not_in_image when divisibility fails.
std::vector<BigInt> from_ghost(uint64_t p, const std::vector<BigInt>& g);

/// Witt-vector arithmetic W_n(R) over a coefficient-ring context R.
template <class R>
class WittRing {
 public:
  using Elem = typename R::Elem;
  using Vec = std::vector<Elem>;

  WittRing(R ring, uint64_t p, uint32_t n)
      : ring_(ring), p_(p), n_(n), polys_(&witt_universal_polynomials(p, n)) {}

  const R& ring() const { return ring_; }
  uint64_t p() const { return p_; }
  uint32_t n() const { return n_; }

  Vec zero() const { return Vec(n_, ring_.zero()); }
  Vec one() const { return teichmuller(ring_.one()); }
  Vec teichmuller(const Elem& a) const {
    Vec v(n_, ring_.zero());
    v[0] = a;
    return v;
  }

  Vec add(const Vec& a, const Vec& b) const { return eval2(polys_->sum, a, b); }
  Vec sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }
  Vec mul(const Vec& a, const Vec& b) const { return eval2(polys_->prod, a, b); }
  Vec neg(const Vec& a) const { return eval2(polys_->neg, a, Vec(n_, ring_.zero())); }
  Vec scalar_mul(int64_t k, const Vec& a) const;

  /// V(a_0..a_{n-1}) = (0, a_0, .., a_{n-1}): raises length to n+1; the
  /// result lives in W_{n+1}(R) (callers re-wrap with a length-(n+1) ring).
  Vec verschiebung(const Vec& a) const {
    Vec v;
    v.reserve(a.size() + 1);
    v.push_back(ring_.zero());
    for (auto& x : a) v.push_back(x);
    return v;
  }

  /// Frobenius W_n -> W_{n-1} via the universal polynomials; requires n >= 2.
  Vec frobenius(const Vec& a) const {
    if (n_ < 2) throw length_bounds("frobenius: length would underflow");
    check(a);
    Vec out;
    out.reserve(n_ - 1);
    for (uint32_t i = 0; i + 1 < n_; ++i) out.push_back(eval1(polys_->frob[i], a));
    return out;
  }
  /// Characteristic-p fast path: componentwise p-th power with length drop.
  Vec frobenius_charp(const Vec& a) const {
    if (n_ < 2) throw length_bounds("frobenius: length would underflow");
    Vec out;
    for (uint32_t i = 0; i + 1 < n_; ++i) out.push_back(ring_.pow(a[i], p_));
    return out;
  }

  std::vector<Elem> ghost_components(const Vec& a) const {
    check(a);
    std::vector<Elem> g;
    for (uint32_t i = 0; i < n_; ++i) {
      Elem s = ring_.zero();
      BigInt pj = 1;
      for (uint32_t j = 0; j <= i; ++j) {
        uint64_t ex = 1;
        for (uint32_t k = 0; k < i - j; ++k) ex *= p_;
        s = ring_.add(s, ring_.mul(ring_.from_bigint(pj), ring_.pow(a[j], ex)));
        pj *= p_;
      }
      g.push_back(s);
    }
    return g;
  }

  bool equal(const Vec& a, const Vec& b) const {
    for (uint32_t i = 0; i < n_; ++i)
      if (!ring_.equal(a[i], b[i])) return false;
    return true;
  }

 private:
  void check(const Vec& a) const {
    if (a.size() != n_) throw mixed_length("WittRing: operand length mismatch");
  }
  Elem eval1(const BPoly& poly, const Vec& a) const {
    Vec args = a;
    args.resize(polys_->n, ring_.zero());
    return eval_poly(poly, args);
  }
  Vec eval2(const std::vector<BPoly>& polys, const Vec& a, const Vec& b) const {
    check(a);
    check(b);
    Vec args;
    args.reserve(2 * n_);
    for (auto& x : a) args.push_back(x);
    for (auto& x : b) args.push_back(x);
    Vec out;
    out.reserve(n_);
    for (uint32_t i = 0; i < n_; ++i) out.push_back(eval_poly(polys[i], args));
    return out;
  }
  Elem eval_poly(const BPoly& poly, const Vec& args) const {
    Elem s = ring_.zero();
    for (const auto& [m, c] : poly.t) {
      Elem term = ring_.from_bigint(c);
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i]) term = ring_.mul(term, ring_.pow(args[i], m[i]));
      s = ring_.add(s, term);
    }
    return s;
  }

  R ring_;
  uint64_t p_;
  uint32_t n_;
  const WittPolys* polys_;
};

template <class R>
typename WittRing<R>::Vec WittRing<R>::scalar_mul(int64_t k, const Vec& a) const {
  Vec acc = zero();
  Vec base = k < 0 ? neg(a) : a;
  uint64_t kk = k < 0 ? uint64_t(-k) : uint64_t(k);
  for (uint64_t i = 0; i < kk; ++i) acc = add(acc, base);
  return acc;
}

}  // namespace wittkit

#include "wittkit/witt.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <mutex>

#include "wittkit/cache.hpp"

namespace wittkit {

using json = nlohmann::json;

BPoly BPoly::constant(uint32_t nv, BigInt c) {
  BPoly r{nv, {}};
  if (c != 0) r.t[Mono(nv, 0)] = std::move(c);
  return r;
}

BPoly BPoly::variable(uint32_t nv, uint32_t i, uint32_t e) {
  BPoly r{nv, {}};
  Mono m(nv, 0);
  m[i] = e;
  r.t[m] = 1;
  return r;
}

BPoly badd(const BPoly& a, const BPoly& b) {
  BPoly r = a;
  for (const auto& [m, c] : b.t) {
    auto it = r.t.find(m);
    if (it == r.t.end())
      r.t[m] = c;
    else {
      it->second += c;
      if (it->second == 0) r.t.erase(it);
    }
  }
  return r;
}

BPoly bsub(const BPoly& a, const BPoly& b) { return badd(a, bscale(b, -1)); }

BPoly bscale(const BPoly& a, const BigInt& c) {
  BPoly r{a.nvars, {}};
  if (c == 0) return r;
  for (const auto& [m, x] : a.t) r.t[m] = x * c;
  return r;
}

BPoly bmul(const BPoly& a, const BPoly& b) {
  BPoly r{a.nvars, {}};
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) {
      Mono m = mono_add(ma, mb);
      auto it = r.t.find(m);
      if (it == r.t.end())
        r.t[m] = ca * cb;
      else {
        it->second += ca * cb;
        if (it->second == 0) r.t.erase(it);
      }
    }
  return r;
}

BPoly bpow(const BPoly& a, uint64_t k) {
  BPoly r = BPoly::constant(a.nvars, 1);
  BPoly base = a;
  while (k) {
    if (k & 1) r = bmul(r, base);
    k >>= 1;
    if (k) base = bmul(base, base);
  }
  return r;
}

BPoly bdiv_exact(const BPoly& a, const BigInt& c) {
  BPoly r{a.nvars, {}};
  for (const auto& [m, x] : a.t) {
    if (x % c != 0) throw not_in_image("bdiv_exact: coefficient not divisible");
    r.t[m] = x / c;
  }
  return r;
}

ZPoly ZPoly::zero(ZmodCtx c, uint32_t nv, uint32_t bound) { return ZPoly{c, nv, bound, {}}; }

ZPoly ZPoly::constant(ZmodCtx c, uint32_t nv, uint32_t bound, uint64_t v) {
  ZPoly r{c, nv, bound, {}};
  v %= c.q;
  if (v) r.t[Mono(nv, 0)] = v;
  return r;
}

ZPoly ZPoly::variable(ZmodCtx c, uint32_t nv, uint32_t bound, uint32_t i, uint32_t e) {
  Mono m(nv, 0);
  m[i] = e;
  return monomial(c, nv, bound, m, 1);
}

ZPoly ZPoly::monomial(ZmodCtx c, uint32_t nv, uint32_t bound, const Mono& m, uint64_t v) {
  if (mono_degree(m) > bound) throw truncation_overflow("ZPoly: monomial beyond bound");
  ZPoly r{c, nv, bound, {}};
  v %= c.q;
  if (v) r.t[m] = v;
  return r;
}

uint32_t ZPoly::degree() const {
  uint32_t d = 0;
  for (const auto& [m, v] : t) d = std::max(d, mono_degree(m));
  return d;
}

ZPoly padd(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [m, v] : b.t) {
    auto it = r.t.find(m);
    if (it == r.t.end()) {
      if (v) r.t[m] = v;
    } else {
      it->second = a.c.add(it->second, v);
      if (!it->second) r.t.erase(it);
    }
  }
  return r;
}

ZPoly pneg(const ZPoly& a) {
  ZPoly r = a;
  for (auto& [m, v] : r.t) v = a.c.neg(v);
  return r;
}

ZPoly psub(const ZPoly& a, const ZPoly& b) { return padd(a, pneg(b)); }

ZPoly pscale(const ZPoly& a, uint64_t c) {
  ZPoly r{a.c, a.nvars, a.bound, {}};
  c %= a.c.q;
  for (const auto& [m, v] : a.t) {
    uint64_t w = a.c.mul(v, c);
    if (w) r.t[m] = w;
  }
  return r;
}

ZPoly pmul(const ZPoly& a, const ZPoly& b) {
  ZPoly r{a.c, a.nvars, a.bound, {}};
  for (const auto& [ma, va] : a.t)
    for (const auto& [mb, vb] : b.t) {
      uint64_t v = a.c.mul(va, vb);
      if (!v) continue;
      Mono m = mono_add(ma, mb);
      if (mono_degree(m) > a.bound)
        throw truncation_overflow("pmul: product exceeds degree bound");
      auto it = r.t.find(m);
      if (it == r.t.end())
        r.t[m] = v;
      else {
        it->second = a.c.add(it->second, v);
        if (!it->second) r.t.erase(it);
      }
    }
  return r;
}

ZPoly ppow(const ZPoly& a, uint64_t k) {
  ZPoly r = ZPoly::constant(a.c, a.nvars, a.bound, 1);
  ZPoly base = a;
  while (k) {
    if (k & 1) r = pmul(r, base);
    k >>= 1;
    if (k) base = pmul(base, base);
  }
  return r;
}

ZPoly pderiv(const ZPoly& a, uint32_t var) {
  ZPoly r{a.c, a.nvars, a.bound, {}};
  for (const auto& [m, v] : a.t) {
    if (!m[var]) continue;
    uint64_t w = a.c.mul(v, m[var] % a.c.q);
    if (!w) continue;
    Mono mm = m;
    --mm[var];
    r.t[mm] = w;
  }
  return r;
}

BigInt BigIntRing::pow(Elem a, uint64_t k) const {
  Elem r = 1;
  while (k) {
    if (k & 1) r *= a;
    k >>= 1;
    if (k) a *= a;
  }
  return r;
}

uint64_t ZmodRing::from_bigint(const BigInt& v) const {
  BigInt m = v % BigInt(c.q);
  if (m < 0) m += c.q;
  return m.convert_to<uint64_t>();
}

ZPoly ZPolyRing::from_bigint(const BigInt& v) const {
  ZmodRing zr{c};
  return ZPoly::constant(c, nvars, bound, zr.from_bigint(v));
}

namespace {

BPoly ghost_poly(uint64_t p, uint32_t nv, uint32_t i, uint32_t offset) {
  // w_i over variables offset..offset+i
  BPoly s = BPoly::zero(nv);
  BigInt pj = 1;
  for (uint32_t j = 0; j <= i; ++j) {
    uint64_t ex = 1;
    for (uint32_t k = 0; k < i - j; ++k) ex *= p;
    s = badd(s, bscale(BPoly::variable(nv, offset + j, uint32_t(ex)), pj));
    pj *= p;
  }
  return s;
}

// Solve w_i(Z_0..Z_i) = target_i for Z_i by the ghost recursion.
std::vector<BPoly> ghost_solve(uint64_t p, uint32_t nv,
                               const std::vector<BPoly>& targets) {
  std::vector<BPoly> z;
  BigInt pi = 1;
  for (uint32_t i = 0; i < targets.size(); ++i) {
    BPoly rhs = targets[i];
    BigInt pj = 1;
    for (uint32_t j = 0; j < i; ++j) {
      uint64_t ex = 1;
      for (uint32_t k = 0; k < i - j; ++k) ex *= p;
      rhs = bsub(rhs, bscale(bpow(z[j], ex), pj));
      pj *= p;
    }
    z.push_back(bdiv_exact(rhs, pi));
    pi *= p;
    (void)nv;  // all components share the ambient variable block
  }
  return z;
}

json poly_to_json(const BPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.t) {
    json t;
    t["c"] = c.str();
    t["m"] = m;
    terms.push_back(t);
  }
  json out;
  out["nvars"] = p.nvars;
  out["terms"] = terms;
  return out;
}

BPoly poly_from_json(const json& j) {
  BPoly p = BPoly::zero(j.at("nvars").get<uint32_t>());
  for (const auto& t : j.at("terms")) {
    Mono m = t.at("m").get<Mono>();
    p.t[m] = BigInt(t.at("c").get<std::string>());
  }
  return p;
}

WittPolys build_polys(uint64_t p, uint32_t n) {
  WittPolys wp;
  wp.p = p;
  wp.n = n;
  uint32_t nv = 2 * n;  // x_0..x_{n-1}, y_0..y_{n-1}
  std::vector<BPoly> sum_t, prod_t, neg_t, frob_t;
  for (uint32_t i = 0; i < n; ++i) {
    BPoly wx = ghost_poly(p, nv, i, 0);
    BPoly wy = ghost_poly(p, nv, i, n);
    sum_t.push_back(badd(wx, wy));
    prod_t.push_back(bmul(wx, wy));
    neg_t.push_back(bscale(wx, -1));
    if (i + 1 < n) frob_t.push_back(ghost_poly(p, nv, i + 1, 0));
  }
  wp.sum = ghost_solve(p, nv, sum_t);
  wp.prod = ghost_solve(p, nv, prod_t);
  wp.neg = ghost_solve(p, nv, neg_t);
  wp.frob = ghost_solve(p, nv, frob_t);
  return wp;
}

std::string polys_key(uint64_t p, uint32_t n) {
  return "witt-polys/p" + std::to_string(p) + "-n" + std::to_string(n) + "-v1";
}

json polys_to_json(const WittPolys& wp) {
  json j;
  j["schema"] = "witt-polys/v1";
  j["p"] = wp.p;
  j["n"] = wp.n;
  for (const char* k : {"sum", "prod", "neg", "frob"}) j[k] = json::array();
  for (const auto& q : wp.sum) j["sum"].push_back(poly_to_json(q));
  for (const auto& q : wp.prod) j["prod"].push_back(poly_to_json(q));
  for (const auto& q : wp.neg) j["neg"].push_back(poly_to_json(q));
  for (const auto& q : wp.frob) j["frob"].push_back(poly_to_json(q));
  return j;
}

bool polys_from_json(const json& j, WittPolys& wp) {
  if (j.value("schema", "") != "witt-polys/v1") return false;
  wp.p = j.at("p").get<uint64_t>();
  wp.n = j.at("n").get<uint32_t>();
  for (const auto& q : j.at("sum")) wp.sum.push_back(poly_from_json(q));
  for (const auto& q : j.at("prod")) wp.prod.push_back(poly_from_json(q));
  for (const auto& q : j.at("neg")) wp.neg.push_back(poly_from_json(q));
  for (const auto& q : j.at("frob")) wp.frob.push_back(poly_from_json(q));
  return wp.sum.size() == wp.n && wp.prod.size() == wp.n && wp.neg.size() == wp.n &&
         wp.frob.size() + 1 == wp.n;
}

std::mutex g_polys_mu;
std::map<std::pair<uint64_t, uint32_t>, std::unique_ptr<WittPolys>> g_polys;

}  // namespace

const WittPolys& witt_universal_polynomials(uint64_t p, uint32_t n) {
  if (p < 2 || n < 1 || n > 8)
    throw config_invalid("witt_universal_polynomials: need p prime, 1 <= n <= 8");
  std::lock_guard lk(g_polys_mu);
  auto key = std::make_pair(p, n);
  auto it = g_polys.find(key);
  if (it != g_polys.end()) return *it->second;

  auto wp = std::make_unique<WittPolys>();
  bool loaded = false;
  if (auto payload = cache_get(polys_key(p, n))) {
    try {
      json j = json::parse(*payload);
      loaded = polys_from_json(j, *wp);
    } catch (...) {
      loaded = false;  // corrupted entries are discarded and recomputed
    }
  }
  if (!loaded) {
    *wp = build_polys(p, n);
    cache_put(polys_key(p, n), polys_to_json(*wp).dump());
  }
  const WittPolys& ref = *wp;
  g_polys[key] = std::move(wp);
  return ref;
}

std::vector<BigInt> ghost(uint64_t p, const std::vector<BigInt>& a) {
  std::vector<BigInt> g;
  BigIntRing R;
  for (uint32_t i = 0; i < a.size(); ++i) {
    BigInt s = 0, pj = 1;
    for (uint32_t j = 0; j <= i; ++j) {
      uint64_t ex = 1;
      for (uint32_t k = 0; k < i - j; ++k) ex *= p;
      s += pj * R.pow(a[j], ex);
      pj *= p;
    }
    g.push_back(s);
  }
  return g;
}

std::vector<BigInt> from_ghost(uint64_t p, const std::vector<BigInt>& g) {
  std::vector<BigInt> a;
  BigIntRing R;
  BigInt pi = 1;
  for (uint32_t i = 0; i < g.size(); ++i) {
    BigInt rhs = g[i];
    BigInt pj = 1;
    for (uint32_t j = 0; j < i; ++j) {
      uint64_t ex = 1;
      for (uint32_t k = 0; k < i - j; ++k) ex *= p;
      rhs -= pj * R.pow(a[j], ex);
      pj *= p;
    }
    if (rhs % pi != 0) throw not_in_image("from_ghost: divisibility fails");
    a.push_back(rhs / pi);
    pi *= p;
  }
  return a;
}

}  // namespace wittkit

#include "wittkit/zmat.hpp"

#include <algorithm>
#include <cassert>

namespace wittkit {

ZModMatrix ZModMatrix::identity(ZmodCtx ctx, size_t n) {
  ZModMatrix m(ctx, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1 % ctx.q;
  return m;
}

ZModMatrix ZModMatrix::from_rows(ZmodCtx ctx, size_t cols,
                                 const std::vector<std::vector<uint64_t>>& rows) {
  ZModMatrix m(ctx, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == cols);
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j] % ctx.q;
  }
  return m;
}

void ZModMatrix::append_row(const std::vector<uint64_t>& v) {
  assert(v.size() == cols_ || rows_ == 0);
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  for (uint64_t x : v) a_.push_back(x % ctx_.q);
  ++rows_;
}

bool ZModMatrix::is_zero() const {
  for (uint64_t x : a_)
    if (x) return false;
  return true;
}

ZModMatrix ZModMatrix::mul(const ZModMatrix& o) const {
  assert(cols_ == o.rows_);
  ZModMatrix r(ctx_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t v = (*this)(i, k);
      if (!v) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r(i, j) = ctx_.add(r(i, j), ctx_.mul(v, o(k, j)));
    }
  return r;
}

ZModMatrix ZModMatrix::add(const ZModMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  ZModMatrix r(ctx_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ctx_.add(a_[i], o.a_[i]);
  return r;
}

ZModMatrix ZModMatrix::scale(uint64_t c) const {
  ZModMatrix r(ctx_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ctx_.mul(a_[i], c % ctx_.q);
  return r;
}

ZModMatrix ZModMatrix::vstack(const ZModMatrix& o) const {
  assert(cols_ == o.cols_);
  ZModMatrix r(ctx_, rows_ + o.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(o.a_.begin(), o.a_.end(), r.a_.begin() + a_.size());
  return r;
}

std::vector<uint64_t> vec_mat(const ZmodCtx& ctx, const std::vector<uint64_t>& v,
                              const ZModMatrix& m) {
  assert(v.size() == m.rows());
  std::vector<uint64_t> r(m.cols(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (size_t j = 0; j < m.cols(); ++j) r[j] = ctx.add(r[j], ctx.mul(v[i], m(i, j)));
  }
  return r;
}

namespace {

struct WorkRow {
  std::vector<uint64_t> w;  // matrix part
  std::vector<uint64_t> u;  // transform part (may be empty)
  bool pivot = false;
};

void axpy(const ZmodCtx& ctx, std::vector<uint64_t>& dst, uint64_t c,
          const std::vector<uint64_t>& src) {
  for (size_t j = 0; j < dst.size(); ++j)
    dst[j] = ctx.sub(dst[j], ctx.mul(c, src[j]));
}

void scale_row(const ZmodCtx& ctx, std::vector<uint64_t>& v, uint64_t c) {
  for (auto& x : v) x = ctx.mul(x, c);
}

bool row_zero(const std::vector<uint64_t>& v) {
  for (uint64_t x : v)
    if (x) return false;
  return true;
}

// Shared Howell elimination. Rows may carry transform parts. Closure rows are
// appended as new work rows. Returns indices of pivot rows in pivot-column
// order.
std::vector<size_t> howell_eliminate(const ZmodCtx& ctx, std::vector<WorkRow>& rows,
                                     size_t cols) {
  std::vector<size_t> pivots;
  for (size_t j = 0; j < cols; ++j) {
    // pick unpivoted row with minimal valuation at column j
    size_t best = SIZE_MAX;
    uint32_t bestv = ctx.e + 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].pivot || rows[r].w[j] == 0) continue;
      uint32_t v = ctx.val(rows[r].w[j]);
      if (v < bestv) {
        bestv = v;
        best = r;
      }
    }
    if (best == SIZE_MAX) continue;
    WorkRow& pr = rows[best];
    uint64_t inv = ctx.inv_unit(ctx.unit_part(pr.w[j]));
    scale_row(ctx, pr.w, inv);
    if (!pr.u.empty()) scale_row(ctx, pr.u, inv);
    uint64_t piv = ctx.ppow(bestv);
    assert(pr.w[j] == piv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == best || rows[r].pivot || rows[r].w[j] == 0) continue;
      uint64_t c = rows[r].w[j] / piv;  // valuation >= bestv by minimality
      axpy(ctx, rows[r].w, c, pr.w);
      if (!rows[r].u.empty()) axpy(ctx, rows[r].u, c, pr.u);
      assert(rows[r].w[j] == 0);
    }
    pr.pivot = true;
    pivots.push_back(best);
    if (bestv > 0) {
      // Howell closure: p^(e-v) * pivot row joins the working set.
      WorkRow cl;
      cl.w = pr.w;
      uint64_t m = ctx.ppow(ctx.e - bestv);
      scale_row(ctx, cl.w, m);
      if (!pr.u.empty()) {
        cl.u = pr.u;
        scale_row(ctx, cl.u, m);
      }
      if (!row_zero(cl.w)) rows.push_back(std::move(cl));
    }
  }
  // Reduce entries above each pivot modulo the pivot.
  for (size_t k = 0; k < pivots.size(); ++k) {
    const auto& pk = rows[pivots[k]];
    size_t cj = 0;
    while (pk.w[cj] == 0) ++cj;
    uint64_t piv = pk.w[cj];
    for (size_t i = 0; i < k; ++i) {
      auto& pi = rows[pivots[i]];
      uint64_t t = pi.w[cj] / piv;
      if (!t) continue;
      axpy(ctx, pi.w, t, pk.w);
      if (!pi.u.empty()) axpy(ctx, pi.u, t, pk.u);
    }
  }
  return pivots;
}

}  // namespace

ZModMatrix howell_basis(const ZModMatrix& m) {
  const ZmodCtx& ctx = m.ctx();
  std::vector<WorkRow> rows;
  rows.reserve(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) {
    WorkRow r;
    r.w = m.row(i);
    if (!row_zero(r.w)) rows.push_back(std::move(r));
  }
  auto pivots = howell_eliminate(ctx, rows, m.cols());
  ZModMatrix h(ctx, 0, m.cols());
  for (size_t idx : pivots) h.append_row(rows[idx].w);
  return h;
}

HowellResult howell_form(const ZModMatrix& m) {
  const ZmodCtx& ctx = m.ctx();
  size_t n = m.rows(), c = m.cols();
  std::vector<WorkRow> rows;
  rows.reserve(n + c);
  for (size_t i = 0; i < n; ++i) {
    WorkRow r;
    r.w = m.row(i);
    r.u.assign(n, 0);
    r.u[i] = 1 % ctx.q;
    rows.push_back(std::move(r));
  }
  auto pivots = howell_eliminate(ctx, rows, c);

  HowellResult res;
  res.howell = ZModMatrix(ctx, 0, c);
  res.transform = ZModMatrix(ctx, 0, n);
  res.kernel = ZModMatrix(ctx, 0, n);
  for (size_t idx : pivots) {
    res.howell.append_row(rows[idx].w);
    res.transform.append_row(rows[idx].u);
    size_t cj = 0;
    while (rows[idx].w[cj] == 0) ++cj;
    res.pivot_cols.push_back(cj);
    res.pivot_vals.push_back(ctx.val(rows[idx].w[cj]));
  }
  // Kernel generators: transforms of rows that vanished...
  for (const auto& r : rows) {
    if (!r.pivot && row_zero(r.w) && !row_zero(r.u)) res.kernel.append_row(r.u);
  }
  // ...plus, per pivot, the closure combination p^(e-v) e_i - backsub.
  size_t np = pivots.size();
  for (size_t i = 0; i < np; ++i) {
    uint32_t v = res.pivot_vals[i];
    if (v == 0) continue;  // p^e * row contributes nothing
    uint64_t mfac = ctx.ppow(ctx.e - v);
    std::vector<uint64_t> w = res.howell.row(i);
    scale_row(ctx, w, mfac);
    std::vector<uint64_t> kv = res.transform.row(i);
    scale_row(ctx, kv, mfac);
    if (!row_zero(w)) {
      // express w over later Howell rows (guaranteed by the Howell property)
      ZModMatrix tail(ctx, 0, c);
      for (size_t t = i + 1; t < np; ++t) tail.append_row(res.howell.row(t));
      auto sol = solve_against_howell(tail, w);
      if (!sol) throw error("howell_form: closure row escapes trailing span");
      for (size_t t = i + 1; t < np; ++t) {
        uint64_t cf = (*sol)[t - i - 1];
        if (!cf) continue;
        auto ut = res.transform.row(t);
        for (size_t j = 0; j < n; ++j) kv[j] = ctx.sub(kv[j], ctx.mul(cf, ut[j]));
      }
    }
    if (!row_zero(kv)) res.kernel.append_row(kv);
  }
  res.kernel = howell_basis(res.kernel);
  return res;
}

std::optional<std::vector<uint64_t>> solve_against_howell(const ZModMatrix& h,
                                                          const std::vector<uint64_t>& b) {
  const ZmodCtx& ctx = h.ctx();
  std::vector<uint64_t> x(h.rows(), 0), r = b;
  for (size_t t = 0; t < h.rows(); ++t) {
    size_t cj = 0;
    while (cj < h.cols() && h(t, cj) == 0) ++cj;
    if (cj == h.cols()) continue;
    // residual must vanish left of this pivot
    for (size_t j = 0; j < cj; ++j)
      if (r[j]) return std::nullopt;
    if (r[cj]) {
      uint64_t piv = h(t, cj);
      if (r[cj] % piv) return std::nullopt;
      uint64_t cf = r[cj] / piv;
      x[t] = cf;
      for (size_t j = cj; j < h.cols(); ++j) r[j] = ctx.sub(r[j], ctx.mul(cf, h(t, j)));
    }
  }
  if (!row_zero(r)) return std::nullopt;
  return x;
}

std::optional<std::vector<uint64_t>> solve_left(const ZModMatrix& a,
                                                const std::vector<uint64_t>& b) {
  auto hr = howell_form(a);
  auto c = solve_against_howell(hr.howell, b);
  if (!c) return std::nullopt;
  return vec_mat(a.ctx(), *c, hr.transform);
}

ZModMatrix left_kernel(const ZModMatrix& a) {
  if (a.cols() == 0) return ZModMatrix::identity(a.ctx(), a.rows());
  return howell_form(a).kernel;
}

namespace {

// Smith normal form over Z/p^e of L (l x k): row ops untracked, column ops
// tracked so that relations become p^{v_j} y_j = 0 in coordinates y = x*C.
struct SmithResult {
  ZModMatrix C, Cinv;
  std::vector<uint32_t> exps;  // size k
};

SmithResult smith_form(ZModMatrix L) {
  const ZmodCtx ctx = L.ctx();
  size_t l = L.rows(), k = L.cols();
  ZModMatrix C = ZModMatrix::identity(ctx, k);
  ZModMatrix Cinv = ZModMatrix::identity(ctx, k);
  std::vector<uint32_t> exps(k, ctx.e);

  auto col_swap = [&](size_t c1, size_t c2) {
    if (c1 == c2) return;
    for (size_t i = 0; i < l; ++i) std::swap(L(i, c1), L(i, c2));
    for (size_t i = 0; i < k; ++i) std::swap(C(i, c1), C(i, c2));
    for (size_t j = 0; j < k; ++j) std::swap(Cinv(c1, j), Cinv(c2, j));
  };
  auto col_scale = [&](size_t c, uint64_t u) {
    for (size_t i = 0; i < l; ++i) L(i, c) = ctx.mul(L(i, c), u);
    for (size_t i = 0; i < k; ++i) C(i, c) = ctx.mul(C(i, c), u);
    uint64_t ui = ctx.inv_unit(u);
    for (size_t j = 0; j < k; ++j) Cinv(c, j) = ctx.mul(Cinv(c, j), ui);
  };
  auto col_axpy = [&](size_t dst, uint64_t t, size_t src) {
    // col_dst -= t * col_src; Cinv row_src += t * row_dst
    for (size_t i = 0; i < l; ++i) L(i, dst) = ctx.sub(L(i, dst), ctx.mul(t, L(i, src)));
    for (size_t i = 0; i < k; ++i) C(i, dst) = ctx.sub(C(i, dst), ctx.mul(t, C(i, src)));
    for (size_t j = 0; j < k; ++j)
      Cinv(src, j) = ctx.add(Cinv(src, j), ctx.mul(t, Cinv(dst, j)));
  };

  size_t pos = 0;
  while (pos < l && pos < k) {
    // global min-valuation pivot in the trailing block
    size_t br = SIZE_MAX, bc = SIZE_MAX;
    uint32_t bv = ctx.e;
    for (size_t i = pos; i < l; ++i)
      for (size_t j = pos; j < k; ++j) {
        if (!L(i, j)) continue;
        uint32_t v = ctx.val(L(i, j));
        if (v < bv) {
          bv = v;
          br = i;
          bc = j;
        }
      }
    if (br == SIZE_MAX) break;
    // move pivot to (pos, pos)
    if (br != pos)
      for (size_t j = 0; j < k; ++j) std::swap(L(br, j), L(pos, j));
    col_swap(bc, pos);
    col_scale(pos, ctx.inv_unit(ctx.unit_part(L(pos, pos))));
    uint64_t piv = L(pos, pos);
    // clear column (row ops, untracked)
    for (size_t i = 0; i < l; ++i) {
      if (i == pos || !L(i, pos)) continue;
      uint64_t t = L(i, pos) / piv;
      for (size_t j = 0; j < k; ++j) L(i, j) = ctx.sub(L(i, j), ctx.mul(t, L(pos, j)));
    }
    // clear row (col ops)
    for (size_t j = pos + 1; j < k; ++j) {
      if (!L(pos, j)) continue;
      uint64_t t = L(pos, j) / piv;
      col_axpy(j, t, pos);
    }
    exps[pos] = bv;
    ++pos;
  }
  SmithResult r;
  r.C = std::move(C);
  r.Cinv = std::move(Cinv);
  r.exps = std::move(exps);
  return r;
}

}  // namespace

SubquotientModule::SubquotientModule(const ZModMatrix& Z, const ZModMatrix& B) {
  const ZmodCtx& ctx = Z.ctx();
  Z_ = Z;
  auto hr = howell_form(Z);
  Zhow_ = hr.howell;
  Ztr_ = hr.transform;
  Bhow_ = howell_basis(B);
  for (size_t i = 0; i < Bhow_.rows(); ++i)
    if (!solve_against_howell(Zhow_, Bhow_.row(i)))
      throw error("SubquotientModule: denominator not contained in numerator span");
  // L = {x in R^k : x*Z in span(B)} via the left kernel of [Z; B]
  ZModMatrix stacked = Z.vstack(Bhow_);
  ZModMatrix kerS = left_kernel(stacked);
  ZModMatrix L(ctx, 0, Z.rows());
  for (size_t i = 0; i < kerS.rows(); ++i) {
    auto full = kerS.row(i);
    L.append_row(std::vector<uint64_t>(full.begin(), full.begin() + Z.rows()));
  }
  auto sm = smith_form(howell_basis(L));
  C_ = std::move(sm.C);
  Cinv_ = std::move(sm.Cinv);
  exps_ = std::move(sm.exps);
  for (size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > 0) keep_.push_back(j);
}

uint64_t SubquotientModule::length() const {
  uint64_t s = 0;
  for (size_t j : keep_) s += exps_[j];
  return s;
}

std::vector<uint32_t> SubquotientModule::invariant_factors() const {
  std::vector<uint32_t> f;
  for (size_t j : keep_) f.push_back(exps_[j]);
  std::sort(f.rbegin(), f.rend());
  return f;
}

size_t SubquotientModule::num_generators() const { return keep_.size(); }

std::vector<uint64_t> SubquotientModule::generator(size_t j) const {
  return vec_mat(ctx(), Cinv_.row(keep_[j]), Z_);
}

std::optional<std::vector<uint64_t>> SubquotientModule::coords_of(
    const std::vector<uint64_t>& v) const {
  auto c = solve_against_howell(Zhow_, v);
  if (!c) return std::nullopt;
  auto x = vec_mat(ctx(), *c, Ztr_);
  auto y = vec_mat(ctx(), x, C_);
  std::vector<uint64_t> out;
  out.reserve(keep_.size());
  for (size_t j : keep_) out.push_back(y[j] % ctx().ppow_int(exps_[j]));
  return out;
}

bool SubquotientModule::contains(const std::vector<uint64_t>& v) const {
  return solve_against_howell(Zhow_, v).has_value();
}

bool SubquotientModule::is_zero_class(const std::vector<uint64_t>& v) const {
  auto c = coords_of(v);
  if (!c) return false;
  for (uint64_t x : *c)
    if (x) return false;
  return true;
}

bool SubquotientModule::equal_classes(const std::vector<uint64_t>& a,
                                      const std::vector<uint64_t>& b) const {
  std::vector<uint64_t> d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = ctx().sub(a[i], b[i]);
  return is_zero_class(d);
}

std::vector<uint64_t> SubquotientModule::from_coords(
    const std::vector<uint64_t>& coords) const {
  std::vector<uint64_t> v(ambient_dim(), 0);
  for (size_t j = 0; j < keep_.size(); ++j) {
    if (!coords[j]) continue;
    auto g = generator(j);
    for (size_t t = 0; t < v.size(); ++t)
      v[t] = ctx().add(v[t], ctx().mul(coords[j], g[t]));
  }
  return v;
}

SubquotientModule complex_cohomology(const ZModMatrix& d_in, const ZModMatrix& d_out) {
  if (d_in.rows() > 0 && d_out.cols() > 0 && !d_in.mul(d_out).is_zero())
    throw composition_nonzero("complex_cohomology: d_in * d_out != 0");
  ZModMatrix Z = left_kernel(d_out);
  return SubquotientModule(Z, d_in);
}

}  // namespace wittkit

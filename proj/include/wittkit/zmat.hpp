#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wittkit/zmod.hpp"

namespace wittkit {

/// Dense matrix over Z/p^e, row-major. Vectors are rows and maps act on the
/// right: a map R^a -> R^b is an a x b matrix A with v |-> v*A.
class ZModMatrix {
 public:
  ZModMatrix() = default;
  ZModMatrix(ZmodCtx ctx, size_t rows, size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static ZModMatrix identity(ZmodCtx ctx, size_t n);
  static ZModMatrix from_rows(ZmodCtx ctx, size_t cols,
                              const std::vector<std::vector<uint64_t>>& rows);

  const ZmodCtx& ctx() const { return ctx_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint64_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  uint64_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  void set(size_t r, size_t c, int64_t v) { a_[r * cols_ + c] = ctx_.reduce_i64(v); }

  std::vector<uint64_t> row(size_t r) const {
    return std::vector<uint64_t>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  void append_row(const std::vector<uint64_t>& v);

  bool is_zero() const;
  bool operator==(const ZModMatrix& o) const {
    return ctx_ == o.ctx_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  ZModMatrix mul(const ZModMatrix& o) const;
  ZModMatrix add(const ZModMatrix& o) const;
  ZModMatrix scale(uint64_t c) const;
  ZModMatrix vstack(const ZModMatrix& o) const;

 private:
  ZmodCtx ctx_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint64_t> a_;
};

std::vector<uint64_t> vec_mat(const ZmodCtx& ctx, const std::vector<uint64_t>& v,
                              const ZModMatrix& m);

/// Row-span normal form over Z/p^e. `howell` is the canonical Howell form
/// (pivots are p-powers, entries in pivot columns reduced modulo the pivot,
/// span closed under leading-zero sections); `transform * M == howell`;
/// `kernel` rows generate the left kernel {v : v*M = 0}.
struct HowellResult {
  ZModMatrix howell;
  ZModMatrix transform;
  ZModMatrix kernel;
  std::vector<size_t> pivot_cols;
  std::vector<uint32_t> pivot_vals;
};

HowellResult howell_form(const ZModMatrix& m);

/// Canonical Howell basis of the row span only (no transform/kernel); the
/// cheap workhorse for large relation spans.
ZModMatrix howell_basis(const ZModMatrix& m);

/// Membership solve x*H = b against a Howell basis H; returns nullopt when b
/// is outside the span.
std::optional<std::vector<uint64_t>> solve_against_howell(const ZModMatrix& h,
                                                          const std::vector<uint64_t>& b);

/// Particular solution of x*A = b (via howell_form).
std::optional<std::vector<uint64_t>> solve_left(const ZModMatrix& a,
                                                const std::vector<uint64_t>& b);

ZModMatrix left_kernel(const ZModMatrix& a);

/// A finite module presented as a subquotient span(Z)/span(B) of R^amb,
/// R = Z/p^e, with Smith-form coordinates: y = x*C where x are coefficients
/// on the rows of Z and the j-th coordinate has annihilator p^exps[j].
/// Generators with exps[j] = 0 are trivial and skipped in reports.
class SubquotientModule {
 public:
  SubquotientModule() = default;
  /// B's rows must lie in span(Z) (checked).
  SubquotientModule(const ZModMatrix& Z, const ZModMatrix& B);

  const ZmodCtx& ctx() const { return Z_.ctx(); }
  size_t ambient_dim() const { return Z_.cols(); }
  /// Sum of exponents e_i over invariant factors p^{e_i}.
  uint64_t length() const;
  /// Exponents e_i >= 1 of the invariant factors p^{e_i}, sorted descending.
  std::vector<uint32_t> invariant_factors() const;
  size_t num_generators() const;  // generators with nontrivial factor
  /// Representative of the j-th nontrivial generator, in ambient coordinates.
  std::vector<uint64_t> generator(size_t j) const;

  /// Canonical coordinates of an ambient vector (must lie in span(Z)):
  /// one residue mod p^{e_j} per nontrivial generator.
  std::optional<std::vector<uint64_t>> coords_of(const std::vector<uint64_t>& v) const;
  bool contains(const std::vector<uint64_t>& v) const;
  bool is_zero_class(const std::vector<uint64_t>& v) const;
  bool equal_classes(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) const;

  /// Ambient representative with the given canonical coordinates.
  std::vector<uint64_t> from_coords(const std::vector<uint64_t>& coords) const;

  const ZModMatrix& sub_generators() const { return Z_; }
  const ZModMatrix& denominator_howell() const { return Bhow_; }

 private:
  ZModMatrix Z_;      // k x amb generators of the subspan
  ZModMatrix Zhow_;   // Howell basis of span(Z) for membership solves
  ZModMatrix Ztr_;    // transform rows: Ztr_ * Z_ = Zhow_
  ZModMatrix Bhow_;   // Howell basis of span(B)
  ZModMatrix C_, Cinv_;          // Smith coordinate change on R^k
  std::vector<uint32_t> exps_;   // annihilator exponents per Smith coordinate
  std::vector<size_t> keep_;     // indices with exps_ > 0
};

/// Middle cohomology ker(d_out)/im(d_in) of R^a --d_in--> R^b --d_out--> R^c.
/// Throws composition_nonzero unless d_in*d_out == 0.
SubquotientModule complex_cohomology(const ZModMatrix& d_in, const ZModMatrix& d_out);

}  // namespace wittkit

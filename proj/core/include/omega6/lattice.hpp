#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "omega6/bigint.hpp"
#include "omega6/error.hpp"

namespace omega6 {

/// Dense square matrix of arbitrary-precision integers. Symmetry is a
/// property of the *content*, checked by the operations that require it;
/// the empty 0x0 matrix is a valid form (determinant 1, signature 0).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  /// Builds from row vectors; rejects ragged or non-square input.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int dim() const { return n_; }

  const Int& operator()(int i, int j) const { return a_[idx(i, j)]; }
  Int& operator()(int i, int j) { return a_[idx(i, j)]; }

  bool is_symmetric() const;
  /// All diagonal entries even (the algebraic spin condition).
  bool is_even() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<Int> a_;
};

/// Symmetric unimodular integer form, the intersection pairing of a
/// 4-manifold bounded by an integral homology sphere. Only constructible
/// through validate_form, so det is always cached and equal to +-1.
class IntersectionForm {
 public:
  const IntMatrix& matrix() const { return m_; }
  const Int& det() const { return det_; }
  int dim() const { return m_.dim(); }
  bool is_even() const { return m_.is_even(); }

  bool operator==(const IntersectionForm&) const = default;

 private:
  friend IntersectionForm validate_form(IntMatrix m);
  IntersectionForm(IntMatrix m, Int det) : m_(std::move(m)), det_(std::move(det)) {}

  IntMatrix m_;
  Int det_;
};

/// Solution of the Wu congruence Q v == diag(Q) (mod 2); entries in {0,1}.
struct CharVector {
  std::vector<Int> v;

  bool operator==(const CharVector&) const = default;
};

/// Checks symmetry and unimodularity; caches the determinant.
/// Throws NotSymmetric or NotUnimodular (boundary is not a homology sphere).
IntersectionForm validate_form(IntMatrix m);

/// Exact determinant by fraction-free (Bareiss) elimination. det of the
/// empty matrix is 1.
Int determinant(const IntMatrix& m);

/// Signature by exact congruence diagonalization over the rationals with
/// symmetric pivoting. A zero diagonal is repaired by symmetrically adding
/// another row; an all-zero remaining block means the form is degenerate.
/// Throws NotSymmetric or Degenerate.
int signature(const IntMatrix& m);

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
IntersectionForm direct_sum(const IntersectionForm& a, const IntersectionForm& b);

/// v^T Q v, the square of the class v under the pairing.
Int quadratic_value(const IntMatrix& q, std::span<const Int> v);

/// True iff (Qv)[i] == Q[i][i] (mod 2) for all i, equivalently
/// v.x == x.x (mod 2) for all x. Throws DimensionMismatch.
bool is_characteristic(const IntersectionForm& q, std::span<const Int> v);

/// Solves the Wu congruence over GF(2). For unimodular forms the reduction
/// mod 2 is invertible, so the {0,1}-lift is unique (hence lexicographically
/// least). Throws Internal if elimination fails on corrupted input.
CharVector find_characteristic(const IntersectionForm& q);

/// T^T Q T for T a seeded product of `steps` elementary unimodular matrices
/// (identity plus a single off-diagonal +-1). Deterministic in the seed;
/// preserves determinant and signature. Entries may grow.
IntersectionForm random_unimodular_congruence(const IntersectionForm& q, std::uint64_t seed,
                                              int steps);

}  // namespace omega6

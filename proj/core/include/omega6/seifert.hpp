#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omega6/lattice.hpp"

namespace omega6 {

/// Algebraic presentation of a Seifert surface V^4 in the 6-sphere:
/// the intersection form of V^4, the Poincare dual of the normal Euler
/// class in the same basis, and the label of the boundary sphere.
/// Only constructible through make_surface, so the characteristic and
/// mod-8 conditions always hold.
class SeifertSurfaceData {
 public:
  const IntersectionForm& form() const { return form_; }
  const std::vector<Int>& euler_dual() const { return euler_; }
  const std::string& boundary() const { return boundary_; }
  int dim() const { return form_.dim(); }
  /// Signature of the form, cached at validation time.
  int sigma() const { return sigma_; }

  bool operator==(const SeifertSurfaceData&) const = default;

 private:
  friend SeifertSurfaceData make_surface(IntersectionForm q, std::vector<Int> v,
                                         std::string boundary);
  SeifertSurfaceData(IntersectionForm q, std::vector<Int> v, std::string boundary, int sigma)
      : form_(std::move(q)), euler_(std::move(v)), boundary_(std::move(boundary)), sigma_(sigma) {}

  IntersectionForm form_;
  std::vector<Int> euler_;
  std::string boundary_;
  int sigma_;
};

/// Validates a claimed presentation: the form must be unimodular (already
/// enforced by its type), v must be characteristic for it, and
/// sigma - v^T Q v must vanish mod 8 (automatic by van der Blij; kept as an
/// internal consistency assertion). Throws NotCharacteristic, Mod8Violation.
SeifertSurfaceData make_surface(IntersectionForm q, std::vector<Int> v, std::string boundary);

/// Overload taking a raw matrix; throws NotSymmetric/NotUnimodular first.
SeifertSurfaceData make_surface(IntMatrix m, std::vector<Int> v, std::string boundary);

/// e.e: the square of the normal Euler class, v^T Q v.
Int euler_square(const SeifertSurfaceData& s);

/// Hopf invariant of the outward normal field the surface induces on its
/// boundary: -e.e.
Int hopf(const SeifertSurfaceData& s);

/// The complete isotopy invariant -(sigma + H)/8 = -(sigma - e.e)/8.
/// The division is exact on validated data.
Int omega(const SeifertSurfaceData& s);

/// Boundary connected sum with |k| standard blocks: k > 0 appends k copies
/// of the P-block ([[1]], euler entry 1), k < 0 appends |k| Q-blocks
/// ([[-1]], euler entry 1). Leaves omega and the boundary label unchanged;
/// hopf drops by k.
SeifertSurfaceData stabilize(const SeifertSurfaceData& s, std::int64_t k);

/// Block sum of the forms, concatenated Euler duals, boundary labels joined
/// by '#'. sigma, hopf and omega are all additive.
SeifertSurfaceData boundary_connected_sum(const SeifertSurfaceData& a,
                                          const SeifertSurfaceData& b);

/// The P-block datum: punctured complex projective plane, sigma 1, hopf -1.
SeifertSurfaceData p_block(std::string boundary = "S3");
/// The Q-block datum: reversed orientation, sigma -1, hopf +1.
SeifertSurfaceData q_block(std::string boundary = "S3");

}  // namespace omega6

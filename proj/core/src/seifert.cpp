#include "omega6/seifert.hpp"

#include <sstream>
#include <utility>

namespace omega6 {

SeifertSurfaceData make_surface(IntersectionForm q, std::vector<Int> v, std::string boundary) {
  if (!is_characteristic(q, v))
    fail(Errc::NotCharacteristic, "euler vector is not characteristic for the form");
  const int sigma_q = signature(q.matrix());
  const Int square = quadratic_value(q.matrix(), v);
  if ((Int(sigma_q) - square) % 8 != 0) {
    std::ostringstream os;
    os << "sigma " << sigma_q << " and euler square " << square
       << " differ by a non-multiple of 8";
    fail(Errc::Mod8Violation, os.str());
  }
  return SeifertSurfaceData(std::move(q), std::move(v), std::move(boundary), sigma_q);
}

SeifertSurfaceData make_surface(IntMatrix m, std::vector<Int> v, std::string boundary) {
  return make_surface(validate_form(std::move(m)), std::move(v), std::move(boundary));
}

Int euler_square(const SeifertSurfaceData& s) {
  return quadratic_value(s.form().matrix(), s.euler_dual());
}

Int hopf(const SeifertSurfaceData& s) { return -euler_square(s); }

Int omega(const SeifertSurfaceData& s) {
  const Int numerator = -(Int(s.sigma()) + hopf(s));
  if (numerator % 8 != 0)
    fail(Errc::Mod8Violation, "omega numerator not divisible by 8 on validated data");
  return numerator / 8;
}

SeifertSurfaceData stabilize(const SeifertSurfaceData& s, std::int64_t k) {
  if (k == 0) return s;
  const Int diag = k > 0 ? 1 : -1;
  const int count = static_cast<int>(k > 0 ? k : -k);
  const int n = s.dim();
  IntMatrix m(n + count);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = s.form().matrix()(i, j);
  std::vector<Int> v = s.euler_dual();
  for (int b = 0; b < count; ++b) {
    m(n + b, n + b) = diag;
    v.emplace_back(1);
  }
  return make_surface(std::move(m), std::move(v), s.boundary());
}

SeifertSurfaceData boundary_connected_sum(const SeifertSurfaceData& a,
                                          const SeifertSurfaceData& b) {
  std::vector<Int> v = a.euler_dual();
  v.insert(v.end(), b.euler_dual().begin(), b.euler_dual().end());
  return make_surface(direct_sum(a.form(), b.form()), std::move(v),
                      a.boundary() + "#" + b.boundary());
}

SeifertSurfaceData p_block(std::string boundary) {
  return make_surface(IntMatrix::from_rows({{Int(1)}}), {Int(1)}, std::move(boundary));
}

SeifertSurfaceData q_block(std::string boundary) {
  return make_surface(IntMatrix::from_rows({{Int(-1)}}), {Int(1)}, std::move(boundary));
}

}  // namespace omega6

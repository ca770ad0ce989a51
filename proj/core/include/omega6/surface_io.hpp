#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "omega6/embeddings.hpp"
#include "omega6/seifert.hpp"
#include "omega6/spheres.hpp"

namespace omega6 {

/// A parsed surface file: the validated datum plus its declared name.
struct SurfaceFile {
  std::string name;
  SeifertSurfaceData data;

  bool operator==(const SurfaceFile&) const = default;
};

/// Line-oriented surface format, '#' starts a comment:
///   surface <name>
///   dim <n>
///   row <n integers>      (n lines, top row first)
///   euler <n integers>
///   boundary <sphere-name>
/// Field order is fixed. Parsing delegates validation to make_surface and
/// reports its failures with the offending line number.
SurfaceFile parse_surface(std::string_view text);

/// Canonical emitter; parse(emit(x)) == x.
std::string emit_surface(const SurfaceFile& s);

/// Flat invariant record for one surface. The optional fields are present
/// exactly when the boundary sphere has a certified Rohlin bit.
struct Report {
  std::string name;
  int n = 0;
  Int det;
  int sigma = 0;
  Int euler_square;
  Int hopf;
  Int omega;
  std::string boundary;
  std::optional<int> mu;
  std::optional<bool> compressible;
  std::optional<int> arf;
};

Report build_report(const SurfaceFile& s, const SphereRegistry& registry);

/// "key: value" lines in the field order above.
std::string report_text(const Report& r);
/// One JSON object, same fields and order. Values outside the int64 range
/// are emitted as decimal strings.
std::string report_json(const Report& r);

/// Sphere registry file, one declaration per line, '#' comments:
///   sphere <name> mu <bit>
/// Each sphere gets its own opaque class tag. Throws SyntaxError or
/// DuplicateName.
void load_sphere_file(SphereRegistry& registry, std::string_view text);

}  // namespace omega6

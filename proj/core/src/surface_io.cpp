#include "omega6/surface_io.hpp"

#include <cctype>
#include <cstdint>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <vector>

namespace omega6 {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& what) {
  fail(Errc::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

bool parse_int(const std::string& token, Int& out) {
  if (token.empty()) return false;
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t i = start; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  out = Int(token);
  return true;
}

// Pulls the next non-blank line (comments stripped) as a token stream.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : in_(std::string(text)) {}

  bool next(std::istringstream& line) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++lineno_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      line = std::istringstream(raw);
      return true;
    }
    return false;
  }

  int lineno() const { return lineno_; }

 private:
  std::istringstream in_;
  int lineno_ = 0;
};

std::vector<Int> expect_ints(std::istringstream& line, int count, int lineno,
                             const std::string& what) {
  std::vector<Int> out;
  out.reserve(count);
  std::string token;
  while (line >> token) {
    Int value;
    if (!parse_int(token, value))
      syntax_error(lineno, "'" + token + "' is not an integer in " + what);
    out.push_back(std::move(value));
  }
  if (static_cast<int>(out.size()) != count)
    syntax_error(lineno, what + " needs " + std::to_string(count) + " integers, found " +
                             std::to_string(out.size()));
  return out;
}

}  // namespace

SurfaceFile parse_surface(std::string_view text) {
  LineReader reader(text);
  std::istringstream line;
  std::string key;

  auto expect_line = [&](const std::string& wanted) {
    if (!reader.next(line)) syntax_error(reader.lineno() + 1, "missing '" + wanted + "' line");
    if (!(line >> key) || key != wanted)
      syntax_error(reader.lineno(), "expected '" + wanted + "', found '" + key + "'");
  };

  expect_line("surface");
  std::string name;
  if (!(line >> name)) syntax_error(reader.lineno(), "surface needs a name");

  expect_line("dim");
  std::string dim_token;
  Int dim_value;
  if (!(line >> dim_token) || !parse_int(dim_token, dim_value) || dim_value < 0)
    syntax_error(reader.lineno(), "dim needs a non-negative integer");
  const int n = static_cast<int>(dim_value);

  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    expect_line("row");
    auto row = expect_ints(line, n, reader.lineno(), "row");
    for (int j = 0; j < n; ++j) m(i, j) = std::move(row[j]);
  }

  expect_line("euler");
  auto euler = expect_ints(line, n, reader.lineno(), "euler");

  expect_line("boundary");
  std::string boundary;
  if (!(line >> boundary)) syntax_error(reader.lineno(), "boundary needs a sphere name");

  const int final_line = reader.lineno();
  if (reader.next(line)) {
    line >> key;
    syntax_error(reader.lineno(), "unexpected trailing '" + key + "'");
  }

  try {
    return {std::move(name), make_surface(std::move(m), std::move(euler), std::move(boundary))};
  } catch (const Error& e) {
    if (e.code() == Errc::SyntaxError) throw;
    throw Error(e.code(), "surface ending at line " + std::to_string(final_line) + ": " +
                              std::string(e.what()));
  }
}

std::string emit_surface(const SurfaceFile& s) {
  std::ostringstream os;
  const int n = s.data.dim();
  os << "surface " << s.name << "\n";
  os << "dim " << n << "\n";
  for (int i = 0; i < n; ++i) {
    os << "row";
    for (int j = 0; j < n; ++j) os << " " << s.data.form().matrix()(i, j);
    os << "\n";
  }
  os << "euler";
  for (const auto& entry : s.data.euler_dual()) os << " " << entry;
  os << "\n";
  os << "boundary " << s.data.boundary() << "\n";
  return os.str();
}

Report build_report(const SurfaceFile& s, const SphereRegistry& registry) {
  Report r;
  r.name = s.name;
  r.n = s.data.dim();
  r.det = s.data.form().det();
  r.sigma = s.data.sigma();
  r.euler_square = euler_square(s.data);
  r.hopf = hopf(s.data);
  r.omega = omega(s.data);
  r.boundary = s.data.boundary();
  const EmbeddingClass e = embedding_from_surface(s.data, registry);
  if (e.sphere.rohlin) {
    r.mu = *e.sphere.rohlin;
    r.compressible = is_compressible(e);
    r.arf = arf(e);
  }
  return r;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "name: " << r.name << "\n";
  os << "n: " << r.n << "\n";
  os << "det: " << r.det << "\n";
  os << "sigma: " << r.sigma << "\n";
  os << "euler_square: " << r.euler_square << "\n";
  os << "hopf: " << r.hopf << "\n";
  os << "omega: " << r.omega << "\n";
  os << "boundary: " << r.boundary << "\n";
  if (r.mu) os << "mu: " << *r.mu << "\n";
  if (r.compressible) os << "compressible: " << (*r.compressible ? "true" : "false") << "\n";
  if (r.arf) os << "arf: " << *r.arf << "\n";
  return os.str();
}

namespace {

// int64 when it fits, decimal string otherwise.
nlohmann::ordered_json json_int(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["det"] = json_int(r.det);
  j["sigma"] = r.sigma;
  j["euler_square"] = json_int(r.euler_square);
  j["hopf"] = json_int(r.hopf);
  j["omega"] = json_int(r.omega);
  j["boundary"] = r.boundary;
  if (r.mu) j["mu"] = *r.mu;
  if (r.compressible) j["compressible"] = *r.compressible;
  if (r.arf) j["arf"] = *r.arf;
  return j.dump();
}

void load_sphere_file(SphereRegistry& registry, std::string_view text) {
  LineReader reader(text);
  std::istringstream line;
  while (reader.next(line)) {
    std::string key, name, mu_key, mu_token, extra;
    line >> key;
    if (key != "sphere") syntax_error(reader.lineno(), "expected 'sphere', found '" + key + "'");
    if (!(line >> name >> mu_key >> mu_token) || mu_key != "mu" || (line >> extra))
      syntax_error(reader.lineno(), "expected 'sphere <name> mu <bit>'");
    if (mu_token != "0" && mu_token != "1")
      syntax_error(reader.lineno(), "mu must be 0 or 1, found '" + mu_token + "'");
    registry.register_sphere(name, mu_token == "1" ? 1 : 0, {name});
  }
}

}  // namespace omega6

#include "omega6/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "omega6/embeddings.hpp"
#include "omega6/generate.hpp"
#include "omega6/plumbing.hpp"
#include "omega6/surface_io.hpp"

namespace omega6::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

nlohmann::ordered_json json_int(const Int& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

struct Context {
  std::string format = "text";
  SphereRegistry registry;
  std::ostream& out;

  bool json() const { return format == "json"; }
};

SurfaceFile load_surface(const std::string& path) { return parse_surface(read_file(path)); }

void print_report(Context& ctx, const Report& r) {
  if (ctx.json())
    ctx.out << report_json(r) << "\n";
  else
    ctx.out << report_text(r);
}

void print_decision(Context& ctx, const std::string& key, const Decision& d) {
  if (ctx.json()) {
    nlohmann::ordered_json j;
    j[key] = d.value;
    if (!d.note.empty()) j["note"] = d.note;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << key << ": " << (d.value ? "true" : "false") << "\n";
    if (!d.note.empty()) ctx.out << "note: " << d.note << "\n";
  }
}

int cmd_validate(Context& ctx, const std::string& path) {
  const SurfaceFile s = load_surface(path);
  if (ctx.json()) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["valid"] = true;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "name: " << s.name << "\n" << "valid: true\n";
  }
  return 0;
}

int cmd_invariants(Context& ctx, const std::string& path) {
  print_report(ctx, build_report(load_surface(path), ctx.registry));
  return 0;
}

int cmd_compare(Context& ctx, const std::string& path_a, const std::string& path_b) {
  const SurfaceFile a = load_surface(path_a);
  const SurfaceFile b = load_surface(path_b);
  const Decision d = is_isotopic(embedding_from_surface(a.data, ctx.registry),
                                 embedding_from_surface(b.data, ctx.registry));
  print_decision(ctx, "isotopic", d);
  return 0;
}

int cmd_csum(Context& ctx, const std::string& path_a, const std::string& path_b,
             const std::string& out_path) {
  const SurfaceFile a = load_surface(path_a);
  const SurfaceFile b = load_surface(path_b);
  const SurfaceFile sum{a.name + "#" + b.name, boundary_connected_sum(a.data, b.data)};
  if (!out_path.empty()) write_file(out_path, emit_surface(sum));
  print_report(ctx, build_report(sum, ctx.registry));
  return 0;
}

int cmd_stabilize(Context& ctx, const std::string& path, std::int64_t k,
                  const std::string& out_path) {
  const SurfaceFile s = load_surface(path);
  const SurfaceFile stabilized{s.name, stabilize(s.data, k)};
  if (!out_path.empty()) write_file(out_path, emit_surface(stabilized));
  print_report(ctx, build_report(stabilized, ctx.registry));
  return 0;
}

int cmd_compress(Context& ctx, const std::string& path) {
  const SurfaceFile s = load_surface(path);
  const EmbeddingClass e = embedding_from_surface(s.data, ctx.registry);
  const bool compressible = is_compressible(e);
  const int arf_bit = arf(e);
  if (ctx.json()) {
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["omega"] = json_int(e.omega);
    j["mu"] = *e.sphere.rohlin;
    j["compressible"] = compressible;
    j["arf"] = arf_bit;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "name: " << s.name << "\n";
    ctx.out << "omega: " << e.omega << "\n";
    ctx.out << "mu: " << *e.sphere.rohlin << "\n";
    ctx.out << "compressible: " << (compressible ? "true" : "false") << "\n";
    ctx.out << "arf: " << arf_bit << "\n";
  }
  return 0;
}

int cmd_bordism(Context& ctx, const std::string& path_a, const std::string& path_b) {
  const SurfaceFile a = load_surface(path_a);
  const EmbeddingClass ea = embedding_from_surface(a.data, ctx.registry);
  if (path_b.empty()) {
    const BordismClass c = bordism_class(ea);
    if (ctx.json()) {
      nlohmann::ordered_json j;
      j["name"] = a.name;
      j["class_tag"] = c.class_tag;
      j["omega"] = json_int(c.omega);
      ctx.out << j.dump() << "\n";
    } else {
      ctx.out << "name: " << a.name << "\n";
      ctx.out << "class_tag: " << tag_to_string(c.class_tag) << "\n";
      ctx.out << "omega: " << c.omega << "\n";
    }
    return 0;
  }
  const SurfaceFile b = load_surface(path_b);
  const Decision d = bordant(ea, embedding_from_surface(b.data, ctx.registry));
  print_decision(ctx, "bordant", d);
  return 0;
}

int cmd_plumbing(Context& ctx, const std::string& path) {
  const PlumbingGraph g = parse_plumbing(read_file(path));
  const IntMatrix m = form_from_plumbing(g);
  const Int det = determinant(m);
  const bool unimodular = det == 1 || det == -1;
  const bool even = m.is_even();
  std::optional<int> sigma_value;
  if (det != 0) sigma_value = signature(m);
  std::optional<int> mu;
  if (unimodular && even) mu = rohlin_from_spin_form(validate_form(m));

  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos) name.erase(dot);

  if (ctx.json()) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["n"] = m.dim();
    j["det"] = json_int(det);
    if (sigma_value) j["sigma"] = *sigma_value;
    j["even"] = even;
    j["unimodular"] = unimodular;
    if (mu) j["mu"] = *mu;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "name: " << name << "\n";
    ctx.out << "n: " << m.dim() << "\n";
    ctx.out << "det: " << det << "\n";
    if (sigma_value) ctx.out << "sigma: " << *sigma_value << "\n";
    ctx.out << "even: " << (even ? "true" : "false") << "\n";
    ctx.out << "unimodular: " << (unimodular ? "true" : "false") << "\n";
    if (mu) ctx.out << "mu: " << *mu << "\n";
  }
  return 0;
}

int cmd_fuzz(Context& ctx, int count, int max_dim, std::uint64_t seed) {
  const VanDerBlijStats stats = run_van_der_blij(seed, count, max_dim);
  const int passed = stats.checked - stats.failures;
  if (ctx.json()) {
    nlohmann::ordered_json j;
    j["checked"] = stats.checked;
    j["passed"] = passed;
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << "van der Blij: " << passed << "/" << stats.checked << " pass\n";
  }
  return stats.failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of homology 3-sphere embeddings in the 6-sphere"};
  app.name("omega6");
  app.fallthrough();
  app.require_subcommand(1);

  Context ctx{.format = "text", .registry = {}, .out = out};
  std::string spheres_path;
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--spheres", spheres_path, "Sphere registry file");

  std::string path_a, path_b, out_path;
  std::int64_t k = 0;
  int count = 1000, max_dim = 12;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "Check a surface file");
  validate->add_option("file", path_a)->required();

  auto* invariants = app.add_subcommand("invariants", "Report all invariants of a surface");
  invariants->add_option("file", path_a)->required();

  auto* compare = app.add_subcommand("compare", "Decide isotopy of two surfaces' boundaries");
  compare->add_option("a", path_a)->required();
  compare->add_option("b", path_b)->required();

  auto* csum = app.add_subcommand("csum", "Boundary connected sum of two surfaces");
  csum->add_option("a", path_a)->required();
  csum->add_option("b", path_b)->required();
  csum->add_option("--out", out_path, "Write the summed surface file");

  auto* stab = app.add_subcommand("stabilize", "Boundary-sum with standard +-1 blocks");
  stab->add_option("--k", k, "Block count; positive appends P-blocks, negative Q-blocks")
      ->required();
  stab->add_option("file", path_a)->required();
  stab->add_option("--out", out_path, "Write the stabilized surface file");

  auto* compress = app.add_subcommand("compress", "Decide compressibility into the 5-sphere");
  compress->add_option("file", path_a)->required();

  auto* bordism = app.add_subcommand("bordism", "Bordism class, or bordance of two surfaces");
  bordism->add_option("a", path_a)->required();
  bordism->add_option("b", path_b);

  auto* plumbing = app.add_subcommand("plumbing", "Intersection form of a plumbing graph");
  plumbing->add_option("graphfile", path_a)->required();

  auto* fuzz = app.add_subcommand("fuzz", "Fuzz the mod-8 congruence on random forms");
  fuzz->add_option("--count", count, "Number of forms");
  fuzz->add_option("--max-dim", max_dim, "Maximum form dimension");
  fuzz->add_option("--seed", seed, "Generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!spheres_path.empty()) load_sphere_file(ctx.registry, read_file(spheres_path));
    if (validate->parsed()) return cmd_validate(ctx, path_a);
    if (invariants->parsed()) return cmd_invariants(ctx, path_a);
    if (compare->parsed()) return cmd_compare(ctx, path_a, path_b);
    if (csum->parsed()) return cmd_csum(ctx, path_a, path_b, out_path);
    if (stab->parsed()) return cmd_stabilize(ctx, path_a, k, out_path);
    if (compress->parsed()) return cmd_compress(ctx, path_a);
    if (bordism->parsed()) return cmd_bordism(ctx, path_a, path_b);
    if (plumbing->parsed()) return cmd_plumbing(ctx, path_a);
    if (fuzz->parsed()) return cmd_fuzz(ctx, count, max_dim, seed);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace omega6::cli

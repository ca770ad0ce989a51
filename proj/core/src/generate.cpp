#include "omega6/generate.hpp"

#include "omega6/plumbing.hpp"

namespace omega6 {

namespace {

IntMatrix hyperbolic_block() {
  IntMatrix h(2);
  h(0, 1) = 1;
  h(1, 0) = 1;
  return h;
}

IntMatrix unit_block(int sign) {
  IntMatrix m(1);
  m(0, 0) = sign;
  return m;
}

}  // namespace

IntersectionForm random_unimodular_form(std::mt19937_64& rng, const FormGenOptions& opt) {
  const IntMatrix e8 = form_from_plumbing(e8_graph());
  IntMatrix sum;
  // At least one block; stop when the next block would overflow max_dim.
  while (true) {
    const int room = opt.max_dim - sum.dim();
    if (sum.dim() > 0 && (room <= 0 || rng() % 3 == 0)) break;
    IntMatrix block;
    if (opt.even_only) {
      if (room >= 8 && rng() % 4 == 0)
        block = e8;
      else if (room >= 2)
        block = hyperbolic_block();
      else
        break;
    } else {
      switch (rng() % 4) {
        case 0: block = unit_block(1); break;
        case 1: block = unit_block(-1); break;
        case 2:
          block = room >= 2 ? hyperbolic_block() : unit_block(1);
          break;
        default:
          block = room >= 8 ? e8 : unit_block(-1);
          break;
      }
    }
    if (block.dim() > room) break;
    sum = direct_sum(sum, block);
  }
  if (sum.dim() == 0) sum = opt.even_only ? hyperbolic_block() : unit_block(1);
  const IntersectionForm base = validate_form(std::move(sum));
  const int steps = static_cast<int>(rng() % (opt.max_steps + 1));
  return random_unimodular_congruence(base, rng(), steps);
}

SeifertSurfaceData random_surface(std::mt19937_64& rng, const FormGenOptions& opt,
                                  std::string boundary) {
  IntersectionForm q = random_unimodular_form(rng, opt);
  std::vector<Int> v = find_characteristic(q).v;
  for (auto& entry : v) entry += 2 * (static_cast<int>(rng() % 5) - 2);
  return make_surface(std::move(q), std::move(v), std::move(boundary));
}

VanDerBlijStats run_van_der_blij(std::uint64_t seed, int count, int max_dim) {
  std::mt19937_64 rng(seed);
  FormGenOptions opt;
  opt.max_dim = max_dim;
  VanDerBlijStats stats;
  for (int i = 0; i < count; ++i) {
    const IntersectionForm q = random_unimodular_form(rng, opt);
    const CharVector v = find_characteristic(q);
    const Int square = quadratic_value(q.matrix(), v.v);
    const int sigma_q = signature(q.matrix());
    ++stats.checked;
    if ((Int(sigma_q) - square) % 8 != 0) ++stats.failures;
  }
  return stats;
}

}  // namespace omega6

#pragma once

#include <cstdint>
#include <random>

#include "omega6/seifert.hpp"

namespace omega6 {

struct FormGenOptions {
  int max_dim = 12;
  int max_steps = 25;      // congruence-transform length
  bool even_only = false;  // restrict blocks to hyperbolic planes and E8
};

/// Seeded unimodular form: a random block sum of [1], [-1], hyperbolic
/// planes and E8 (dimension between 1 and max_dim), scrambled by a random
/// unimodular congruence. With even_only the blocks are H and E8 only, so
/// the result stays even.
IntersectionForm random_unimodular_form(std::mt19937_64& rng, const FormGenOptions& opt);

/// Seeded surface datum over the generated form. The Euler dual is the
/// canonical characteristic vector shifted by twice a small random vector,
/// which ranges over every characteristic class.
SeifertSurfaceData random_surface(std::mt19937_64& rng, const FormGenOptions& opt,
                                  std::string boundary = "S3");

struct VanDerBlijStats {
  int checked = 0;
  int failures = 0;
};

/// Runs the mod-8 congruence check sigma == v^T Q v (mod 8) on `count`
/// fuzzed unimodular forms with the canonical characteristic vector.
VanDerBlijStats run_van_der_blij(std::uint64_t seed, int count, int max_dim);

}  // namespace omega6

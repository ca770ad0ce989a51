#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "omega6/generate.hpp"
#include "omega6/lattice.hpp"
#include "omega6/plumbing.hpp"
#include "oracles.hpp"

using namespace omega6;
using helpers::diag;
using helpers::identity;
using helpers::mat;
using helpers::vec;

namespace {

IntMatrix hyperbolic() { return mat({{0, 1}, {1, 0}}); }

IntMatrix e8_matrix() { return form_from_plumbing(e8_graph()); }

// Random symmetric matrix with entries in [-bound, bound].
IntMatrix random_symmetric(std::mt19937_64& rng, int n, int bound) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int value = static_cast<int>(rng() % (2 * bound + 1)) - bound;
      m(i, j) = value;
      m(j, i) = value;
    }
  return m;
}

}  // namespace

TEST_CASE("validate_form accepts unimodular symmetric matrices") {
  const IntersectionForm id3 = validate_form(identity(3));
  CHECK(id3.det() == 1);
  CHECK(id3.dim() == 3);

  const IntersectionForm h = validate_form(hyperbolic());
  CHECK(h.det() == -1);

  // Empty form is a valid presentation: det 1, signature 0.
  const IntersectionForm empty = validate_form(IntMatrix());
  CHECK(empty.det() == 1);
  CHECK(signature(empty.matrix()) == 0);
}

TEST_CASE("validate_form rejects bad input") {
  CHECK_THROWS_WITH_AS(static_cast<void>(validate_form(mat({{2, 1}, {1, 2}}))),
                       doctest::Contains("determinant 3"), Error);
  try {
    static_cast<void>(validate_form(mat({{2, 1}, {1, 2}})));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotUnimodular);
  }
  try {
    static_cast<void>(validate_form(mat({{1, 2}, {0, 1}})));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
}

TEST_CASE("determinant matches hand values and the cofactor oracle") {
  CHECK(determinant(identity(4)) == 1);
  CHECK(determinant(hyperbolic()) == -1);
  CHECK(determinant(IntMatrix()) == 1);
  CHECK(determinant(mat({{2, 1}, {1, 2}})) == 3);

  const IntMatrix e8 = e8_matrix();
  CHECK(determinant(e8) == 1);
  CHECK(determinant(e8) == oracles::det_cofactor(e8));

  // Singular matrices, including ones that need row swaps.
  CHECK(determinant(mat({{0, 0}, {0, 5}})) == 0);
  CHECK(determinant(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 3}})) == -3);
}

TEST_CASE("determinant agrees with cofactor oracle on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 11) - 5;
    CHECK(determinant(m) == oracles::det_cofactor(m));
  }
}

TEST_CASE("signature on the named examples") {
  CHECK(signature(diag({1, -1})) == 0);
  CHECK(signature(hyperbolic()) == 0);

  const IntMatrix e8 = e8_matrix();
  CHECK(signature(e8) == 8);
  CHECK(signature(e8) == oracles::signature_eigen(e8));

  CHECK(signature(diag({5})) == 1);
  CHECK(signature(diag({-3, -4, 2})) == -1);
}

TEST_CASE("signature rejects degenerate and asymmetric input") {
  CHECK_THROWS_AS(static_cast<void>(signature(diag({1, 0}))), Error);
  try {
    static_cast<void>(signature(diag({1, 0})));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Degenerate);
  }
  // Zero block that is not on the diagonal at the start.
  CHECK_THROWS_AS(static_cast<void>(signature(mat({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}))), Error);
  CHECK_THROWS_AS(static_cast<void>(signature(mat({{0, 1}, {2, 0}}))), Error);
}

TEST_CASE("signature handles zero-diagonal pivots") {
  // Fully zero diagonal, nonzero block: hyperbolic pairs contribute zero.
  CHECK(signature(mat({{0, 2}, {2, 0}})) == 0);
  CHECK(signature(mat({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})) == 0);
  // Mixed: one definite direction plus a hyperbolic block.
  CHECK(signature(mat({{3, 0, 0}, {0, 0, 7}, {0, 7, 0}})) == 1);
}

TEST_CASE("signature equals the eigenvalue-count oracle on random input") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 120) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const IntMatrix m = random_symmetric(rng, n, 9);
    if (determinant(m) == 0) continue;
    ++checked;
    CHECK(signature(m) == oracles::signature_eigen(m));
  }
}

TEST_CASE("direct_sum block structure and invariants") {
  const IntersectionForm a = validate_form(mat({{1}}));
  const IntersectionForm b = validate_form(mat({{-1}}));
  const IntersectionForm s = direct_sum(a, b);
  CHECK(s.matrix() == diag({1, -1}));
  CHECK(s.det() == -1);

  // Empty form is the neutral element.
  const IntersectionForm empty = validate_form(IntMatrix());
  const IntersectionForm q = validate_form(hyperbolic());
  CHECK(direct_sum(empty, q) == q);
  CHECK(direct_sum(q, empty) == q);

  const IntersectionForm e8 = validate_form(e8_matrix());
  const IntersectionForm e9 = direct_sum(e8, a);
  CHECK(e9.dim() == 9);
  CHECK(e9.det() == 1);
  CHECK(signature(e9.matrix()) == 9);
  CHECK(signature(e9.matrix()) ==
        oracles::signature_eigen(e8.matrix()) + oracles::signature_eigen(a.matrix()));
}

TEST_CASE("signature and determinant are additive/multiplicative over direct sums") {
  std::mt19937_64 rng(11);
  FormGenOptions opt;
  opt.max_dim = 8;
  for (int trial = 0; trial < 40; ++trial) {
    const IntersectionForm a = random_unimodular_form(rng, opt);
    const IntersectionForm b = random_unimodular_form(rng, opt);
    const IntersectionForm s = direct_sum(a, b);
    CHECK(signature(s.matrix()) == signature(a.matrix()) + signature(b.matrix()));
    CHECK(s.det() == a.det() * b.det());
  }
}

TEST_CASE("is_characteristic on the named examples") {
  CHECK(is_characteristic(validate_form(mat({{1}})), vec({1})));
  CHECK(is_characteristic(validate_form(e8_matrix()), std::vector<Int>(8, 0)));
  CHECK_FALSE(is_characteristic(validate_form(diag({1, -1})), vec({1, 0})));

  CHECK_THROWS_AS(
      static_cast<void>(is_characteristic(validate_form(mat({{1}})), vec({1, 0}))), Error);
}

TEST_CASE("is_characteristic matches brute-force enumeration") {
  std::mt19937_64 rng(23);
  FormGenOptions opt;
  opt.max_dim = 10;
  opt.max_steps = 6;  // keep entries small enough for the oracle
  for (int trial = 0; trial < 30; ++trial) {
    const IntersectionForm q = random_unimodular_form(rng, opt);
    const CharVector good = find_characteristic(q);
    CHECK(is_characteristic(q, good.v));
    CHECK(oracles::characteristic_brute(q, good.v));

    // A perturbed vector must agree with the oracle in both directions.
    std::vector<Int> probe = good.v;
    probe[rng() % probe.size()] += 1;
    CHECK(is_characteristic(q, probe) == oracles::characteristic_brute(q, probe));
  }
}

TEST_CASE("find_characteristic on the named examples") {
  CHECK(find_characteristic(validate_form(mat({{1}}))).v == vec({1}));
  CHECK(find_characteristic(validate_form(e8_matrix())).v == std::vector<Int>(8, 0));
  CHECK(find_characteristic(validate_form(diag({1, -1}))).v == vec({1, 1}));
  CHECK(find_characteristic(validate_form(IntMatrix())).v.empty());
}

TEST_CASE("van der Blij congruence holds on fuzzed forms") {
  const VanDerBlijStats stats = run_van_der_blij(5, 300, 12);
  CHECK(stats.checked == 300);
  CHECK(stats.failures == 0);
}

TEST_CASE("random_unimodular_congruence preserves det and signature") {
  const IntersectionForm d = validate_form(diag({1, -1}));
  CHECK(random_unimodular_congruence(d, 42, 0) == d);

  const IntersectionForm d2 = random_unimodular_congruence(d, 42, 20);
  CHECK(d2.det() == -1);
  CHECK(signature(d2.matrix()) == 0);

  const IntersectionForm e8 = validate_form(e8_matrix());
  const IntersectionForm e8t = random_unimodular_congruence(e8, 7, 50);
  CHECK(e8t.det() == 1);
  CHECK(signature(e8t.matrix()) == 8);

  // Deterministic in the seed.
  CHECK(random_unimodular_congruence(e8, 7, 50) == e8t);
  CHECK_FALSE(random_unimodular_congruence(e8, 8, 50) == e8t);
}

TEST_CASE("congruence invariance across many seeds and step counts") {
  std::mt19937_64 rng(31);
  FormGenOptions opt;
  opt.max_dim = 9;
  for (int trial = 0; trial < 25; ++trial) {
    const IntersectionForm q = random_unimodular_form(rng, opt);
    const int sigma_q = signature(q.matrix());
    const IntersectionForm t = random_unimodular_congruence(q, rng(), 1 + rng() % 40);
    CHECK(t.det() == q.det());
    CHECK(signature(t.matrix()) == sigma_q);
  }
}

TEST_CASE("quadratic_value evaluates v^T Q v") {
  CHECK(quadratic_value(mat({{1}}), vec({3})) == 9);
  CHECK(quadratic_value(hyperbolic(), vec({2, 5})) == 20);
  CHECK(quadratic_value(IntMatrix(), {}) == 0);
  CHECK_THROWS_AS(static_cast<void>(quadratic_value(mat({{1}}), vec({1, 2}))), Error);
}

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"

#include "hyperg/catalog.hpp"
#include "hyperg/expectation.hpp"
#include "hyperg/hypergroup.hpp"
#include "hyperg/rational.hpp"
#include "hyperg/representation.hpp"

using namespace hyperg;

namespace {

HypergroupTable instance_table(const std::string& group, const std::string& builder) {
  const auto cg = catalog_group(group);
  if (builder == "id") return construct_hypergroup(build_identity(cg.table), cg.table);
  if (builder == "conjugation")
    return construct_hypergroup(build_conjugation(cg.table), cg.table);
  if (builder == "double_coset")
    return construct_hypergroup(build_double_coset(cg.table, {0, 2}), cg.table);
  REQUIRE(false);
  return {};
}

bool contains_character(const std::vector<CxVec>& chars, const std::vector<std::complex<double>>& target,
                        double tol = 1e-6) {
  for (const auto& chi : chars) {
    double worst = 0;
    for (std::size_t s = 0; s < target.size(); ++s)
      worst = std::max(worst, std::abs(chi[s] - target[s]));
    if (worst < tol) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("regular families satisfy the representation axioms on the catalog") {
    for (const auto& inst : catalog_instances()) {
      CAPTURE(inst.name);
      const HypergroupTable h = construct_hypergroup(inst.expectation, inst.group.table);
      CHECK(verify_representation(left_regular(h), h).all_pass());
      CHECK(verify_representation(right_regular(h), h).all_pass());
    }
  }

  TEST_CASE("left translation on the two-point quotient, frozen matrix") {
    const HypergroupTable h = instance_table("S3", "double_coset");
    const auto left = left_regular(h);
    CHECK(left[1].entries[0] == CVec{RatC(), RatC(Rat(1))});
    CHECK(left[1].entries[1] == CVec{RatC(rat_of(1, 2)), RatC(rat_of(1, 2))});
    CHECK(left[0].entries[0] == CVec{RatC(Rat(1)), RatC()});
    CHECK(left[1].inner_weights == RatVec{Rat(2), Rat(4)});
  }

  TEST_CASE("translations are contractions and the adjoint flips the point") {
    for (const char* name : {"S3", "Q8"}) {
      const auto cg = catalog_group(name);
      const HypergroupTable h = construct_hypergroup(build_identity(cg.table), cg.table);
      const auto left = left_regular(h);
      const auto right = right_regular(h);
      for (int s = 0; s < h.size; ++s) {
        CHECK(op_norm(left[s]) <= 1 + 1e-12);
        CHECK(op_norm(right[s]) <= 1 + 1e-12);
        CHECK(op_equal(op_weighted_adjoint(left[s]), left[h.involution[s]]));
        CHECK(op_equal(op_weighted_adjoint(right[s]), right[h.involution[s]]));
        for (int t = 0; t < h.size; ++t)
          CHECK(op_equal(op_mult(left[s], right[t]), op_mult(right[t], left[s])));
      }
    }
  }

  TEST_CASE("operator helpers: identity, products, tensor shapes") {
    const HypergroupTable h = instance_table("S3", "conjugation");
    const auto left = left_regular(h);
    const auto id = op_identity(h.haar);
    CHECK(op_equal(op_mult(id, left[1]), left[1]));
    CHECK(op_equal(op_mult(left[1], id), left[1]));
    CHECK(op_equal(op_add(left[1], op_scale(RatC(Rat(-1)), left[1])),
                   op_scale(RatC(), left[1])));
    const auto kron = op_kron(left[1], left[2]);
    CHECK(kron.dim == h.size * h.size);
    CHECK(kron.inner_weights[0 * h.size + 1] == h.haar[0] * h.haar[1]);
    // Mixed-product rule for tensors.
    CHECK(op_equal(op_mult(op_kron(left[1], left[1]), op_kron(left[2], left[2])),
                   op_kron(op_mult(left[1], left[2]), op_mult(left[1], left[2]))));
  }

  TEST_CASE("verification rejects families of the wrong shape") {
    const HypergroupTable two = instance_table("S3", "double_coset");
    const HypergroupTable three = instance_table("S3", "conjugation");
    CHECK_THROWS_AS(verify_representation(left_regular(three), two), RepresentationError);
    try {
      verify_representation(left_regular(three), two);
    } catch (const RepresentationError& e) {
      CHECK(e.defect == RepresentationDefect::DimensionMismatch);
    }
  }

  TEST_CASE("characters of cyclic groups are the exponentials") {
    for (int n : {4, 5, 6}) {
      const auto cg = catalog_group("Z" + std::to_string(n));
      const HypergroupTable h = construct_hypergroup(build_identity(cg.table), cg.table);
      const auto chars = characters(h);
      REQUIRE(int(chars.size()) == n);
      const auto expected = oracle::cyclic_characters(n);
      for (int k = 0; k < n; ++k) CHECK(contains_character(chars, expected[k]));
    }
  }

  TEST_CASE("characters satisfy the defining identities on commutative instances") {
    for (const auto& inst : catalog_instances()) {
      const HypergroupTable h = construct_hypergroup(inst.expectation, inst.group.table);
      if (!is_commutative(h)) continue;
      CAPTURE(inst.name);
      const auto chars = characters(h);
      REQUIRE(int(chars.size()) == h.size);
      for (const auto& chi : chars) {
        CHECK(std::abs(chi[h.identity] - 1.0) < 1e-9);
        for (int s = 0; s < h.size; ++s) {
          CHECK(std::abs(chi[h.involution[s]] - std::conj(chi[s])) < 1e-8);
          for (int t = 0; t < h.size; ++t) {
            std::complex<double> sum = 0;
            for (int r = 0; r < h.size; ++r) sum += rat_double(h.c[s][t][r]) * chi[r];
            CHECK(std::abs(chi[s] * chi[t] - sum) < 1e-8);
          }
        }
      }
      // Distinct characters are orthogonal against the haar weights.
      for (std::size_t a = 0; a < chars.size(); ++a)
        for (std::size_t b = a + 1; b < chars.size(); ++b) {
          std::complex<double> dot = 0;
          for (int s = 0; s < h.size; ++s)
            dot += rat_double(h.haar[s]) * chars[a][s] * std::conj(chars[b][s]);
          CHECK(std::abs(dot) < 1e-7);
        }
    }
  }

  TEST_CASE("frozen character sets of the worked examples") {
    const auto two = characters(instance_table("S3", "double_coset"));
    REQUIRE(two.size() == 2);
    CHECK(std::abs(two[0][1] - std::complex<double>(-0.5)) < 1e-9);  // sorted: -1/2 before 1
    CHECK(std::abs(two[1][1] - std::complex<double>(1.0)) < 1e-9);

    const auto three = characters(instance_table("S3", "conjugation"));
    REQUIRE(three.size() == 3);
    CHECK(contains_character(three, {1.0, 1.0, 1.0}, 1e-9));          // trivial
    CHECK(contains_character(three, {1.0, -1.0, 1.0}, 1e-9));        // sign
    CHECK(contains_character(three, {1.0, 0.0, -0.5}, 1e-9));        // normalized 2-dim trace

    const auto cg = catalog_group("Z5");
    const auto orbits = construct_hypergroup(
        build_automorphism_orbit(cg.table, {{0, 2, 4, 1, 3}}), cg.table);
    const auto golden = characters(orbits);
    REQUIRE(golden.size() == 2);
    CHECK(contains_character(golden, {1.0, 1.0}, 1e-9));
    CHECK(contains_character(golden, {1.0, -0.25}, 1e-9));
  }

  TEST_CASE("characters are deterministic per seed") {
    const HypergroupTable h = instance_table("S3", "conjugation");
    const auto a = characters(h, 7);
    const auto b = characters(h, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
  }

  TEST_CASE("noncommutative tables have no character family") {
    const HypergroupTable h = instance_table("S3", "id");
    CHECK_THROWS_AS(characters(h), RepresentationError);
    try {
      characters(h);
    } catch (const RepresentationError& e) {
      CHECK(e.defect == RepresentationDefect::NotCommutative);
    }
  }

  TEST_CASE("squares are positive definite functions") {
    for (const char* builder : {"id", "double_coset", "conjugation"}) {
      const HypergroupTable h = instance_table("S3", builder);
      RatRng rng(31);
      for (int trial = 0; trial < 32; ++trial) {
        const CVec f = rng.complex_vector(h.size);
        const auto result = positive_definite_check(l1_convolve(f, l1_dagger(f, h), h), h);
        CAPTURE(builder);
        CAPTURE(trial);
        CHECK(result.hermitian);
        CHECK(result.is_pd);
      }
    }
  }

  TEST_CASE("positive definiteness fails for signed and asymmetric functions") {
    const HypergroupTable h = instance_table("S3", "conjugation");
    CVec negative(h.size, RatC());
    negative[h.identity] = RatC(Rat(-1));
    const auto neg = positive_definite_check(negative, h);
    CHECK(neg.hermitian);
    CHECK(!neg.is_pd);
    CHECK(neg.min_eigenvalue < 0);

    const auto z3 = catalog_group("Z3");
    const HypergroupTable hz = construct_hypergroup(build_identity(z3.table), z3.table);
    CVec lopsided(3, RatC());
    lopsided[1] = RatC(Rat(1));  // a point mass away from a self-inverse point
    const auto asym = positive_definite_check(lopsided, hz);
    CHECK(!asym.hermitian);
    CHECK(!asym.is_pd);
  }

  TEST_CASE("rational characters are rank-one positive kernels") {
    const HypergroupTable two = instance_table("S3", "double_coset");
    const auto pd = positive_definite_check({RatC(Rat(1)), RatC(rat_of(-1, 2))}, two);
    CHECK(pd.hermitian);
    CHECK(pd.is_pd);

    const auto cg = catalog_group("Z5");
    const auto orbits = construct_hypergroup(
        build_automorphism_orbit(cg.table, {{0, 2, 4, 1, 3}}), cg.table);
    CHECK(positive_definite_check({RatC(Rat(1)), RatC(rat_of(-1, 4))}, orbits).is_pd);
  }
}

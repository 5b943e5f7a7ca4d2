#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"

#include "hyperg/catalog.hpp"
#include "hyperg/group.hpp"
#include "hyperg/measure.hpp"
#include "hyperg/rational.hpp"

using namespace hyperg;

namespace {

std::vector<std::vector<int>> cyclic_mult(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) m[p][q] = (p + q) % n;
  return m;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("validation accepts cyclic tables and locates identity and inverses") {
    const GroupTable z6 = validate_group(cyclic_mult(6));
    CHECK(z6.order == 6);
    CHECK(z6.identity == 0);
    CHECK(z6.inv(2) == 4);
    CHECK(z6.mul(5, 3) == 2);
  }

  TEST_CASE("validation rejects broken tables with the right defect") {
    auto out_of_range = cyclic_mult(3);
    out_of_range[1][1] = 7;
    CHECK_THROWS_WITH_AS(validate_group(out_of_range), doctest::Contains("entry"),
                         GroupError);
    try {
      validate_group(out_of_range);
    } catch (const GroupError& e) {
      CHECK(e.defect == GroupDefect::NotClosed);
    }

    // A quasigroup that is not associative: subtraction mod 3.
    std::vector<std::vector<int>> subtraction(3, std::vector<int>(3));
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) subtraction[p][q] = ((p - q) % 3 + 3) % 3;
    try {
      validate_group(subtraction);
      CHECK(false);
    } catch (const GroupError& e) {
      CHECK(e.defect == GroupDefect::NotAssociative);
    }

    // Constant rows: closed, associative, no identity.
    std::vector<std::vector<int>> constant = {{0, 0}, {1, 1}};
    try {
      validate_group(constant);
      CHECK(false);
    } catch (const GroupError& e) {
      CHECK(e.defect == GroupDefect::NoIdentity);
    }

    CHECK_THROWS_AS(validate_group({}), GroupError);
    CHECK_THROWS_AS(validate_group({{0, 0}, {0}}), GroupError);
  }

  TEST_CASE("convolution of point masses follows the multiplication table") {
    const GroupTable g = catalog_group("S3").table;
    for (int p = 0; p < g.order; ++p)
      for (int q = 0; q < g.order; ++q) {
        const auto prod = group_convolve(point_mass(CarrierKind::Group, g.order, p),
                                         point_mass(CarrierKind::Group, g.order, q), g);
        for (int r = 0; r < g.order; ++r)
          CHECK(prod.coeffs[r] == (r == g.mul(p, q) ? RatC(Rat(1)) : RatC()));
      }
  }

  TEST_CASE("convolution matches the classical sum on random measures") {
    const GroupTable g = catalog_group("D4").table;
    RatRng rng(11);
    for (int trial = 0; trial < 16; ++trial) {
      const CVec f = rng.complex_vector(g.order);
      const CVec k = rng.complex_vector(g.order);
      MeasureVector mf{CarrierKind::Group, static_cast<std::size_t>(g.order), f};
      MeasureVector mk{CarrierKind::Group, static_cast<std::size_t>(g.order), k};
      const auto prod = group_convolve(mf, mk, g);
      const CVec expected = oracle::classical_group_convolution(f, k, g);
      CHECK(prod.coeffs == expected);
    }
  }

  TEST_CASE("convolution rejects measures on the wrong carrier") {
    const GroupTable g = catalog_group("Z4").table;
    const auto order = static_cast<std::size_t>(g.order);
    MeasureVector wrong{CarrierKind::Hypergroup, order, CVec(order, RatC())};
    MeasureVector fine = point_mass(CarrierKind::Group, g.order, 0);
    CHECK_THROWS_AS(group_convolve(wrong, fine, g), CarrierMismatch);
    MeasureVector short_one{CarrierKind::Group, 3, CVec(3, RatC())};
    CHECK_THROWS_AS(group_convolve(short_one, fine, g), CarrierMismatch);
  }

  TEST_CASE("comultiplication evaluates along products and inversion is involutive") {
    const GroupTable g = catalog_group("Q8").table;
    RatRng rng(5);
    const CVec f = rng.complex_vector(g.order);
    const auto table = comult_apply(f, g);
    for (int p = 0; p < g.order; ++p)
      for (int q = 0; q < g.order; ++q) CHECK(table[p][q] == f[g.mul(p, q)]);
    CHECK(involution_apply(involution_apply(f, g), g) == f);
    CHECK(group_check_involution(g).all_pass());
  }

  TEST_CASE("catalog: names, orders and spot products") {
    const auto names = catalog_group_names();
    CHECK(names.size() == 15);  // Z2..Z12, S3, S4, D4, Q8
    for (const auto& name : names) {
      const auto cg = catalog_group(name);
      CHECK(cg.name == name);
      CHECK(int(cg.element_names.size()) == cg.table.order);
      CHECK(group_check_involution(cg.table).all_pass());
    }
    CHECK_THROWS_AS(catalog_group("A5"), std::invalid_argument);

    const auto s3 = catalog_group("S3");
    CHECK(s3.table.order == 6);
    CHECK(catalog_element_index(s3, "e") == 0);
    CHECK(catalog_element_index(s3, "(12)") == 2);
    CHECK(catalog_element_index(s3, "(23)") == 1);
    // (12)(23) applies (23) first: 1->1->2, 2->3->3, 3->2->1, i.e. (123).
    CHECK(s3.table.mul(2, 1) == catalog_element_index(s3, "(123)"));
    CHECK_THROWS_AS(catalog_element_index(s3, "(14)"), std::invalid_argument);

    const auto s4 = catalog_group("S4");
    CHECK(s4.table.order == 24);

    const auto q8 = catalog_group("Q8");
    const int i = catalog_element_index(q8, "i");
    const int j = catalog_element_index(q8, "j");
    const int k = catalog_element_index(q8, "k");
    const int minus_k = catalog_element_index(q8, "-k");
    CHECK(q8.table.mul(i, j) == k);
    CHECK(q8.table.mul(j, i) == minus_k);
    CHECK(q8.table.mul(i, i) == catalog_element_index(q8, "-1"));

    const auto d4 = catalog_group("D4");
    const int r = catalog_element_index(d4, "r");
    const int s = catalog_element_index(d4, "s");
    CHECK(d4.table.mul(r, r) == catalog_element_index(d4, "r2"));
    CHECK(d4.table.mul(s, s) == 0);
    CHECK(d4.table.mul(d4.table.mul(s, r), d4.table.mul(s, r)) == 0);  // sr is a reflection
  }
}

#include <doctest.h>

#include <stdexcept>

#include <set>

#include "affsl2/catalog.hpp"

using namespace affsl2;

namespace {
ColoredPartition pp(const std::string& s) { return parse_partition(s); }
}

TEST_CASE("catalog shapes") {
  auto [j, a] = catalog_shape_params(4, -7);
  CHECK(j == -1);
  CHECK(a == 2);
  auto [j2, a2] = catalog_shape_params(1, -2);
  CHECK(j2 == -1);
  CHECK(a2 == 0);
}

TEST_CASE("catalog k=4 n=-7: the eleven colorings of (-2)^2 (-1)^3") {
  const char* expected[] = {
      "y(-2)^2 y(-1)^3",        "y(-2) h(-2) y(-1)^3",    "h(-2)^2 y(-1)^3",
      "h(-2) x(-2) y(-1)^3",    "x(-2)^2 y(-1)^3",        "x(-2)^2 y(-1)^2 h(-1)",
      "x(-2)^2 y(-1) h(-1)^2",  "x(-2)^2 h(-1)^3",        "x(-2)^2 h(-1)^2 x(-1)",
      "x(-2)^2 h(-1) x(-1)^2",  "x(-2)^2 x(-1)^3"};
  for (int m = -5; m <= 5; ++m)
    CHECK(catalog_lt_R(4, m, -7) == pp(expected[m + 5]));
}

TEST_CASE("catalog k=1") {
  const char* expected[] = {"y(-2) y(-1)", "h(-2) y(-1)", "x(-2) y(-1)",
                            "x(-2) h(-1)", "x(-2) x(-1)"};
  for (int m = -2; m <= 2; ++m) CHECK(catalog_lt_R(1, m, -3) == pp(expected[m + 2]));
  CHECK(catalog_lt_R(1, 2, -2) == pp("x(-1)^2"));
  CHECK_THROWS_AS(catalog_lt_R(1, 3, -2), std::domain_error);
}

TEST_CASE("catalog invariants: length, shape, weight") {
  for (int k = 0; k <= 4; ++k)
    for (int n = -14; n <= 6; ++n)
      for (int m = -k - 1; m <= k + 1; ++m) {
        ColoredPartition pi = catalog_lt_R(k, m, n);
        CHECK(pi.length() == k + 1);
        CHECK(pi.degree() == n);
        CHECK(pi.weight() == m);
        auto sh = pi.shape();
        CHECK(sh.back() - sh.front() <= 1);
      }
}

TEST_CASE("catalog distinctness in m for fixed n (k <= 4)") {
  for (int k = 0; k <= 4; ++k)
    for (int n = -12; n <= 0; ++n) {
      std::set<std::string> seen;
      for (int m = -k - 1; m <= k + 1; ++m)
        seen.insert(to_string(catalog_lt_R(k, m, n)));
      CHECK(seen.size() == static_cast<std::size_t>(2 * k + 3));
    }
}

TEST_CASE("catalog closed under dual and translate (Prop 7.1.2)") {
  for (int k = 0; k <= 3; ++k)
    for (int n = -10; n <= 10; ++n)
      for (int m = -k - 1; m <= k + 1; ++m) {
        ColoredPartition pi = catalog_lt_R(k, m, n);
        CHECK(pi.dual() == catalog_lt_R(k, -m, -n));
        CHECK(pi.translate(2) == catalog_lt_R(k, m, n - 2 * (k + 1)));
      }
}

TEST_CASE("initial terms for level 1") {
  auto terms0 = catalog_initial_terms(1, 0);
  std::set<std::string> got0;
  for (const auto& g : terms0) got0.insert(to_string(g.partition));
  CHECK(got0 == std::set<std::string>{"y(0)^2", "y(0)", "y(-1) y(0)",
                                      "h(-1) y(0)", "x(-1) y(0)"});

  auto terms1 = catalog_initial_terms(0, 1);
  std::set<std::string> got1;
  for (const auto& g : terms1) got1.insert(to_string(g.partition));
  CHECK(got1 == std::set<std::string>{"y(0)^2", "y(-1) y(0)", "h(-1) y(0)",
                                      "x(-1) y(0)", "x(-1)"});
}

TEST_CASE("difference/initial condition basics") {
  CHECK(satisfies_conditions(pp("1"), 0, 0));
  CHECK(satisfies_conditions(pp("1"), 2, 1));
  CHECK(satisfies_conditions(pp("y(-1) h(-1)"), 1, 1));
  CHECK(!satisfies_conditions(pp("y(-1) h(-1) y(0)"), 1, 1));
  CHECK(!satisfies_conditions(pp("y(-1) h(-1)"), 1, 0));
  CHECK(!satisfies_conditions(pp("y(0)"), 1, 0));
  CHECK(satisfies_conditions(pp("y(0)"), 0, 1));
  CHECK(!satisfies_conditions(pp("x(-1)^2"), 1, 0));
}

TEST_CASE("conditions equal complement of the generated ideal (k <= 2)") {
  for (int k = 1; k <= 2; ++k)
    for (int k1 = 0; k1 <= k; ++k1) {
      int k0 = k - k1;
      auto gens = catalog_lt_R_vLambda_partitions(k0, k1, -8);
      for (int d = 0; d >= -8; --d) {
        auto base = enumerate_to_vector(Alphabet::BStrictNeg, d, {});
        for (const auto& neg : base)
          for (int y0 = 0; y0 <= k + 2; ++y0) {
            ColoredPartition pi = neg.mul(Y(0), y0);
            CHECK(satisfies_conditions(pi, k0, k1) == !in_ideal(pi, gens));
          }
      }
    }
}

TEST_CASE("in_ideal with level-1 difference-condition generators") {
  auto gens = catalog_lt_R_vLambda_partitions(1, 0, -5);
  CHECK(in_ideal(pp("y(-2) h(-2) y(-1)"), gens));
}

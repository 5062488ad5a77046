#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "arrangeo/exact.hpp"

using arrangeo::ExactScalar;
using arrangeo::Int;
using arrangeo::Rat;

namespace {
ExactScalar quad(long a_n, long a_d, long b_n, long b_d, long d) {
  return ExactScalar(Rat(a_n, a_d), Rat(b_n, b_d), Int(d));
}
}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(arrangeo::parse_rat("3/6") == Rat(1, 2));
  CHECK(arrangeo::parse_rat("-4") == Rat(-4));
  CHECK(arrangeo::rat_str(Rat(-3, 9)) == "-1/3");
  CHECK(arrangeo::rat_str(Rat(7)) == "7");
  CHECK_THROWS_AS(arrangeo::parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(arrangeo::parse_rat("2/0"), std::invalid_argument);
  CHECK_THROWS_AS(arrangeo::parse_rat(""), std::invalid_argument);
}

TEST_CASE("normalization keeps radicands squarefree") {
  ExactScalar x = quad(0, 1, 1, 1, 8);  // sqrt(8) = 2 sqrt(2)
  CHECK(x.quad_coeff() == Rat(2));
  CHECK(x.radicand() == 2);

  ExactScalar y = quad(1, 2, 3, 1, 4);  // 1/2 + 3*sqrt(4) = 13/2
  CHECK(y.is_rational());
  CHECK(y.as_rational() == Rat(13, 2));

  ExactScalar z = quad(5, 1, 0, 1, 7);  // zero coefficient collapses to Q
  CHECK(z.is_rational());
  CHECK(z.radicand() == 1);
}

TEST_CASE("comparison: spec cases") {
  CHECK(compare(ExactScalar(Rat(1, 2)), ExactScalar(Rat(1, 3))) > 0);
  // sqrt(2) vs 3/2: 2 < 9/4
  CHECK(compare(quad(0, 1, 1, 1, 2), ExactScalar(Rat(3, 2))) < 0);
  // 1 + sqrt(2) vs 1 + sqrt(3)
  CHECK(compare(quad(1, 1, 1, 1, 2), quad(1, 1, 1, 1, 3)) < 0);
}

TEST_CASE("comparison: equality across representations") {
  CHECK(quad(0, 1, 2, 1, 2) == quad(0, 1, 1, 1, 8));
  CHECK(quad(3, 1, 1, 2, 5) != quad(3, 1, 1, 2, 7));
  CHECK(quad(1, 1, -1, 1, 2).sign() < 0);   // 1 - sqrt(2)
  CHECK(quad(3, 2, -1, 1, 2).sign() > 0);   // 3/2 - sqrt(2)
  CHECK(quad(0, 1, 1, 1, 2).conjugate().sign() < 0);
}

TEST_CASE("arithmetic in one quadratic field") {
  ExactScalar s2 = quad(0, 1, 1, 1, 2);
  ExactScalar v = (ExactScalar(1) + s2) * (ExactScalar(1) + s2);
  CHECK(v == quad(3, 1, 2, 1, 2));
  CHECK((ExactScalar(1) + s2) * (ExactScalar(1) - s2) == ExactScalar(-1));

  ExactScalar q = quad(3, 4, -2, 7, 5);
  ExactScalar w = quad(-1, 3, 5, 2, 5);
  CHECK((q / w) * w == q);
  CHECK(q - q == ExactScalar(0));
  CHECK_THROWS_AS(q / ExactScalar(0), std::domain_error);
  CHECK_THROWS_AS(q + quad(1, 1, 1, 1, 3), std::logic_error);
}

TEST_CASE("sqrt_of_rational") {
  CHECK(arrangeo::sqrt_of_rational(Rat(4, 9)) == ExactScalar(Rat(2, 3)));
  CHECK(arrangeo::sqrt_of_rational(Rat(8)) == quad(0, 1, 2, 1, 2));
  CHECK(arrangeo::sqrt_of_rational(Rat(1, 2)) == quad(0, 1, 1, 2, 2));
  CHECK(arrangeo::sqrt_of_rational(Rat(0)) == ExactScalar(0));
  ExactScalar r = arrangeo::sqrt_of_rational(Rat(10));
  CHECK(r * r == ExactScalar(10));
  CHECK_THROWS_AS(arrangeo::sqrt_of_rational(Rat(-1)), std::domain_error);
}

TEST_CASE("total order on a mixed pool") {
  std::vector<ExactScalar> pool;
  long ds[] = {2, 3, 5, 6, 7, 10};
  for (long dn = -3; dn <= 3; ++dn)
    for (long d : ds) pool.push_back(quad(dn, 2, (dn % 2 == 0) ? 1 : -1, 3, d));
  for (long n = -4; n <= 4; ++n) pool.push_back(ExactScalar(Rat(n, 3)));

  std::sort(pool.begin(), pool.end());
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      CHECK(compare(pool[i], pool[j]) <= 0);
      CHECK(compare(pool[i], pool[j]) == -compare(pool[j], pool[i]));
    }
}

TEST_CASE("compare agrees with 100-digit interval oracle on 10^4 pairs") {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 24);
  long ds[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 17, 19, 163};
  std::uniform_int_distribution<size_t> di(0, std::size(ds) - 1);

  auto rnd = [&]() {
    long d = ds[di(rng)];
    if (d == 1) return ExactScalar(Rat(num(rng), den(rng)));
    return ExactScalar(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Int(d));
  };

  int checked = 0;
  for (int it = 0; it < 10000; ++it) {
    ExactScalar x = rnd(), y = rnd();
    int exact = compare(x, y);
    auto fx = x.approx(), fy = y.approx();
    if (exact == 0) {
      REQUIRE(abs(fx - fy) < 1e-60);
    } else {
      // A nonzero difference of these algebraic numbers is far above the
      // oracle's 1e-95 noise floor.
      REQUIRE(abs(fx - fy) > 1e-60);
      REQUIRE(((fx < fy) ? -1 : 1) == exact);
    }
    ++checked;
  }
  REQUIRE(checked == 10000);
}

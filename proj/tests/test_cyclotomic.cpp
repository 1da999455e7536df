#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kloos/cyclotomic.hpp"
#include "oracle.hpp"

using kloos::BigInt;
using kloos::Cyc;

TEST_CASE("roots of unity, basic values") {
  CHECK(Cyc::root(1, 0) == Cyc(1));
  CHECK(Cyc::root(4, 2) == Cyc(-1));
  CHECK(Cyc::root(6, 3) == Cyc(-1));
  CHECK(Cyc::root(8, 1).conj() == Cyc::root(8, 7));
  CHECK(Cyc::root(5, 7) == Cyc::root(5, 2));
  CHECK(Cyc::root(5, -1) == Cyc::root(5, 4));
  CHECK_THROWS(Cyc::root(0, 1));
}

TEST_CASE("sum of the nontrivial 5th roots is -1") {
  // oracle: float summation
  std::complex<double> f(0, 0);
  for (long k = 1; k <= 4; ++k) f += oracle::root(k, 5);
  CHECK(std::abs(f - std::complex<double>(-1, 0)) < 1e-9);

  Cyc s = Cyc::root(5, 1) + Cyc::root(5, 2) + Cyc::root(5, 3) + Cyc::root(5, 4);
  CHECK(s == Cyc(-1));
  auto n = s.as_integer();
  REQUIRE(n.has_value());
  CHECK(*n == -1);
}

TEST_CASE("as_integer is absent on non-rational values") {
  CHECK(!Cyc::root(5, 1).as_integer().has_value());
  CHECK(Cyc::root(4, 2).as_integer().value() == -1);
}

TEST_CASE("complex embedding matches exp(2 pi i k / N) for N <= 64") {
  for (long n = 1; n <= 64; ++n)
    for (long k = 0; k < n; ++k)
      CHECK(oracle::close(Cyc::root(n, k).to_complex(), oracle::root(k, n)));
}

TEST_CASE("product of Phi_d over divisors of N is x^N - 1, N <= 64") {
  for (long n = 1; n <= 64; ++n) {
    std::vector<BigInt> prod{1};
    for (long d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto& phi = kloos::cyclotomic_polynomial(d);
      std::vector<BigInt> next(prod.size() + phi.size() - 1);
      for (size_t i = 0; i < prod.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    REQUIRE(prod.size() == static_cast<size_t>(n + 1));
    CHECK(prod[0] == -1);
    CHECK(prod[n] == 1);
    for (long i = 1; i < n; ++i) CHECK(prod[i] == 0);
  }
}

TEST_CASE("reduction is idempotent") {
  for (long n : {8, 12, 54}) {
    for (long k = 0; k < n; ++k) {
      Cyc z = Cyc::root(n, k);
      CHECK(Cyc::from_coeffs(n, z.coeffs()) == z);
    }
  }
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937 rng(20260809);
  std::uniform_int_distribution<long> order_pick(0, 5);
  const long orders[] = {2, 3, 4, 8, 9, 12};
  std::uniform_int_distribution<int> coeff(-5, 5);
  auto random_cyc = [&] {
    long n = orders[order_pick(rng)];
    std::vector<BigInt> cs(n);
    for (auto& c : cs) c = coeff(rng);
    return Cyc::from_coeffs(n, std::move(cs));
  };
  for (int trial = 0; trial < 200; ++trial) {
    Cyc a = random_cyc(), b = random_cyc(), c = random_cyc();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Cyc(0));
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).conj() == a * a.conj());
    CHECK(oracle::close(a.to_complex() * b.to_complex(), (a * b).to_complex(), 1e-7));
  }
}

TEST_CASE("mixed-order arithmetic lifts to the lcm") {
  Cyc z = Cyc::root(4, 1) * Cyc::root(3, 1);
  CHECK(z == Cyc::root(12, 7));
  CHECK(Cyc::root(6, 3) + Cyc::root(2, 1) == Cyc(-2));
}

TEST_CASE("rotation by a root matches multiplication") {
  Cyc a = Cyc::root(9, 2) + Cyc(3);
  CHECK(a.rotated(9, 5) == a * Cyc::root(9, 5));
  CHECK(a.rotated(6, 1) == a * Cyc::root(6, 1));
}

TEST_CASE("order lift beyond the cap is rejected") {
  CHECK_THROWS_AS((void)kloos::lcm_order(65536, 3), std::domain_error);
}

TEST_CASE("accumulator agrees with repeated addition") {
  kloos::CycAccumulator acc(12);
  Cyc direct(0);
  for (long k : {0, 5, 5, 7, 11, 3}) {
    acc.add_root(k);
    direct = direct + Cyc::root(12, k);
  }
  CHECK(acc.value() == direct);
}

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kloos {

using BigInt = boost::multiprecision::cpp_int;

// Largest root-of-unity order arithmetic will lift to.
inline constexpr long kMaxCycOrder = 1 << 16;

long totient(long n);

// lcm(a, b), rejecting results above kMaxCycOrder.
long lcm_order(long a, long b);

// Phi_n as a dense coefficient vector, constant term first. Memoized,
// computed by exact division of x^n - 1 by the Phi_d of proper divisors.
const std::vector<BigInt>& cyclotomic_polynomial(long n);

// An element of Z[zeta_N], zeta_N = exp(2*pi*i/N), kept in canonical form:
// the residue mod Phi_N. Coefficients at degree >= phi(N) are zero, and two
// values of a common order are equal iff their coefficient vectors are.
class Cyc {
public:
  Cyc() : order_(1), coeffs_(1) {}
  explicit Cyc(const BigInt& n) : order_(1), coeffs_{n} {}
  explicit Cyc(long n) : order_(1), coeffs_{BigInt(n)} {}

  // zeta_order^k, any integer k
  static Cyc root(long order, long k);
  // sum_k coeffs[k] * zeta_order^k
  static Cyc from_coeffs(long order, std::vector<BigInt> coeffs);

  long order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<BigInt> as_integer() const;
  std::complex<double> to_complex() const;

  Cyc lifted(long new_order) const;  // new_order must be a multiple of order()
  Cyc conj() const;
  Cyc rotated(long root_order, long k) const;  // *this * zeta_root_order^k
  Cyc pow(unsigned k) const;

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc operator-() const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  long order_;
  std::vector<BigInt> coeffs_;

  static Cyc make_canonical(long order, std::vector<BigInt> raw);
  friend class CycAccumulator;
};

// Accumulates a sum of roots of unity of one fixed order; the single
// canonicalization happens when the value is taken.
class CycAccumulator {
public:
  explicit CycAccumulator(long order);
  long order() const { return order_; }
  void add_root(long k);
  void sub_root(long k);
  Cyc value() const;

private:
  long order_;
  std::vector<BigInt> coeffs_;
};

}  // namespace kloos

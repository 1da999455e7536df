#include "kloos/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kloos {

long totient(long n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_order(long a, long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("lcm_order: orders must be positive");
  long g = std::gcd(a, b);
  long l = a / g;
  if (l > kMaxCycOrder / b) throw std::domain_error("cyclotomic order lift exceeds cap 2^16");
  l *= b;
  if (l > kMaxCycOrder) throw std::domain_error("cyclotomic order lift exceeds cap 2^16");
  return l;
}

namespace {

// polynomials are dense BigInt vectors, constant term first
using Poly = std::vector<BigInt>;

Poly x_pow_minus_1(long n) {
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  return p;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor; throws if the remainder is nonzero
Poly divide_exact(Poly num, const Poly& den) {
  if (den.empty() || den.back() != 1)
    throw std::logic_error("divide_exact: divisor must be monic");
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  if (dn < dd) throw std::logic_error("divide_exact: degree underflow");
  Poly quot(dn - dd + 1);
  for (long d = dn; d >= dd; --d) {
    BigInt c = num[d];
    if (c == 0) continue;
    quot[d - dd] = c;
    for (long i = 0; i <= dd; ++i) num[d - dd + i] -= c * den[i];
  }
  for (const BigInt& c : num)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  trim(quot);
  return quot;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
  if (n < 1 || n > kMaxCycOrder)
    throw std::invalid_argument("cyclotomic_polynomial: order out of range");
  static std::map<long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, resolving divisors bottom-up
  std::function<const Poly&(long)> get = [&](long m) -> const Poly& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    Poly num = x_pow_minus_1(m);
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = divide_exact(std::move(num), get(d));
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

Cyc Cyc::make_canonical(long order, std::vector<BigInt> raw) {
  if (order < 1 || order > kMaxCycOrder)
    throw std::invalid_argument("Cyc: order out of range");
  raw.resize(order);
  const Poly& phi = cyclotomic_polynomial(order);
  long dphi = static_cast<long>(phi.size()) - 1;
  for (long d = order - 1; d >= dphi; --d) {
    BigInt c = raw[d];
    if (c == 0) continue;
    for (long i = 0; i <= dphi; ++i) raw[d - dphi + i] -= c * phi[i];
  }
  Cyc z;
  z.order_ = order;
  z.coeffs_ = std::move(raw);
  return z;
}

Cyc Cyc::root(long order, long k) {
  if (order < 1) throw std::invalid_argument("Cyc::root: order must be positive");
  long e = k % order;
  if (e < 0) e += order;
  std::vector<BigInt> raw(order);
  raw[e] = 1;
  return make_canonical(order, std::move(raw));
}

Cyc Cyc::from_coeffs(long order, std::vector<BigInt> coeffs) {
  if (static_cast<long>(coeffs.size()) > order)
    throw std::invalid_argument("Cyc::from_coeffs: too many coefficients");
  return make_canonical(order, std::move(coeffs));
}

bool Cyc::is_zero() const {
  for (const BigInt& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<BigInt> Cyc::as_integer() const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return std::nullopt;
  return coeffs_[0];
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double step = 2.0 * M_PI / static_cast<double>(order_);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double c = coeffs_[k].convert_to<double>();
    acc += std::complex<double>(c * std::cos(step * k), c * std::sin(step * k));
  }
  return acc;
}

Cyc Cyc::lifted(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order < 1 || new_order % order_ != 0)
    throw std::invalid_argument("Cyc::lifted: target must be a multiple of the order");
  long stride = new_order / order_;
  std::vector<BigInt> raw(new_order);
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) raw[k * stride] = coeffs_[k];
  return make_canonical(new_order, std::move(raw));
}

Cyc Cyc::conj() const {
  std::vector<BigInt> raw(order_);
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    raw[k == 0 ? 0 : order_ - k] += coeffs_[k];
  }
  return make_canonical(order_, std::move(raw));
}

Cyc Cyc::rotated(long root_order, long k) const {
  long l = lcm_order(order_, root_order);
  Cyc base = lifted(l);
  long shift = (k % root_order) * (l / root_order);
  shift %= l;
  if (shift < 0) shift += l;
  std::vector<BigInt> raw(l);
  for (size_t j = 0; j < base.coeffs_.size(); ++j)
    if (base.coeffs_[j] != 0) raw[(j + shift) % l] += base.coeffs_[j];
  return make_canonical(l, std::move(raw));
}

Cyc Cyc::pow(unsigned k) const {
  Cyc acc(1);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  long l = lcm_order(a.order_, b.order_);
  Cyc x = a.lifted(l), y = b.lifted(l);
  for (long k = 0; k < l; ++k) x.coeffs_[k] += y.coeffs_[k];
  return x;  // sum of canonical forms stays below degree phi(l)
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  long l = lcm_order(a.order_, b.order_);
  Cyc x = a.lifted(l), y = b.lifted(l);
  for (long k = 0; k < l; ++k) x.coeffs_[k] -= y.coeffs_[k];
  return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  long l = lcm_order(a.order_, b.order_);
  Cyc x = a.lifted(l), y = b.lifted(l);
  std::vector<BigInt> raw(l);
  for (long i = 0; i < l; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (long j = 0; j < l; ++j) {
      if (y.coeffs_[j] == 0) continue;
      raw[(i + j) % l] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return Cyc::make_canonical(l, std::move(raw));
}

Cyc Cyc::operator-() const {
  Cyc z = *this;
  for (BigInt& c : z.coeffs_) c = -c;
  return z;
}

bool Cyc::operator==(const Cyc& o) const {
  long l = lcm_order(order_, o.order_);
  return lifted(l).coeffs_ == o.lifted(l).coeffs_;
}

std::string Cyc::to_string() const {
  if (auto n = as_integer()) return n->str();
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    BigInt c = coeffs_[k];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << "*";
      out << "z" << order_;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

CycAccumulator::CycAccumulator(long order) : order_(order), coeffs_(order) {
  if (order < 1 || order > kMaxCycOrder)
    throw std::invalid_argument("CycAccumulator: order out of range");
}

void CycAccumulator::add_root(long k) {
  long e = k % order_;
  if (e < 0) e += order_;
  ++coeffs_[e];
}

void CycAccumulator::sub_root(long k) {
  long e = k % order_;
  if (e < 0) e += order_;
  --coeffs_[e];
}

Cyc CycAccumulator::value() const { return Cyc::make_canonical(order_, coeffs_); }

}  // namespace kloos

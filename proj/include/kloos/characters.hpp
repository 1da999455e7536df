#pragma once

#include <optional>

#include "kloos/cyclotomic.hpp"
#include "kloos/ring.hpp"

namespace kloos {

// A character of (R,+), stored as an exponent vector against the ring's
// additive decomposition: psi(x) = zeta_N ^ sum_i e_i * coords(x)_i * N/d_i,
// N the additive exponent.
class AdditiveCharacter {
public:
  AdditiveCharacter(RingPtr ring, std::vector<long> exponents);
  static AdditiveCharacter trivial(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<long>& exponents() const { return exps_; }
  long order() const { return order_; }
  long exponent_at(Elem x) const { return table_[x]; }
  Cyc operator()(Elem x) const { return Cyc::root(order_, table_[x]); }
  bool is_trivial() const;

  AdditiveCharacter operator*(const AdditiveCharacter& o) const;
  AdditiveCharacter inverse() const;
  bool operator==(const AdditiveCharacter& o) const;
  bool operator!=(const AdditiveCharacter& o) const { return !(*this == o); }

private:
  RingPtr ring_;
  std::vector<long> exps_;
  long order_;
  std::vector<int> table_;
};

std::vector<AdditiveCharacter> additive_characters(const RingPtr& R);
AdditiveCharacter additive_character_from_index(const RingPtr& R, long index);
long additive_character_count(const RingPtr& R);

// (a.psi)(x) = psi(a x)
AdditiveCharacter scale(const AdditiveCharacter& psi, Elem a);

// largest ideal on which psi is trivial
Ideal conductor(const AdditiveCharacter& psi);
bool is_primitive(const AdditiveCharacter& psi);

// canonical primitive character (constructor recipe when available, else the
// first one in enumeration order); absent iff the ring is not Frobenius
std::optional<AdditiveCharacter> primitive_additive_character(const RingPtr& R);

struct FrobeniusInfo {
  bool frobenius;
  std::optional<AdditiveCharacter> witness;
  std::string certificate;  // set when not Frobenius
};
FrobeniusInfo frobenius_info(const RingPtr& R);
bool is_frobenius(const RingPtr& R);

// sum of psi(c a) over a in I; psi must be primitive. The direct summation is
// checked against the closed form |I| [c in ann(I)] before returning.
Cyc sum_over_ideal(const AdditiveCharacter& psi, const Ideal& I, Elem c);

AdditiveCharacter lift_character(const Quotient& q, const AdditiveCharacter& on_quotient);
AdditiveCharacter push_character(const Quotient& q, const AdditiveCharacter& on_base);

// psi restricted to a local factor (an additive character of the factor ring)
AdditiveCharacter additive_factor(const AdditiveCharacter& psi, const LocalFactor& F);
// factor characters combined into a character of the product-constructed ring
AdditiveCharacter additive_product_character(const RingPtr& product,
                                             const std::vector<AdditiveCharacter>& parts);

// A character of the unit group, exponent vector against the unit-group
// decomposition. Evaluation is defined on units only.
class MultiplicativeCharacter {
public:
  MultiplicativeCharacter(RingPtr ring, std::vector<long> exponents);
  static MultiplicativeCharacter trivial(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<long>& exponents() const { return exps_; }
  long order() const { return order_; }
  long exponent_at(Elem u) const;
  Cyc operator()(Elem u) const;
  bool is_trivial() const;

  MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const;
  MultiplicativeCharacter inverse() const;  // the conjugate character
  MultiplicativeCharacter pow(long k) const;
  bool operator==(const MultiplicativeCharacter& o) const;
  bool operator!=(const MultiplicativeCharacter& o) const { return !(*this == o); }

private:
  RingPtr ring_;
  std::vector<long> exps_;
  long order_;
  std::vector<int> table_;  // exponent per element, -1 on non-units
};

std::vector<MultiplicativeCharacter> multiplicative_characters(const RingPtr& R);
MultiplicativeCharacter multiplicative_character_from_index(const RingPtr& R, long index);
long multiplicative_character_count(const RingPtr& R);

// largest ideal I inside the maximal ideal with chi trivial on 1+I; defined
// for local rings, with conductor R for the trivial character
Ideal conductor(const MultiplicativeCharacter& chi);
bool is_primitive(const MultiplicativeCharacter& chi);

// the unique order-2 character of a local ring of odd characteristic
MultiplicativeCharacter quadratic_character(const RingPtr& R);

// number of unit pairs (u,v) with u+v = b and uv = c; c must be a unit
long count_unit_solutions(const RingPtr& R, Elem b, Elem c);

MultiplicativeCharacter lift_character(const Quotient& q,
                                       const MultiplicativeCharacter& on_quotient);
MultiplicativeCharacter push_character(const Quotient& q,
                                       const MultiplicativeCharacter& on_base);

MultiplicativeCharacter multiplicative_factor(const MultiplicativeCharacter& chi,
                                              const LocalFactor& F);

}  // namespace kloos

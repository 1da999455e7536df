#include "kloos/characters.hpp"

#include <algorithm>

namespace kloos {

namespace {

std::vector<long> normalized(const GroupDecomposition& g, std::vector<long> exps) {
  if (exps.size() != g.factors.size())
    throw std::invalid_argument("character exponent vector has wrong length");
  for (size_t i = 0; i < exps.size(); ++i) {
    long d = g.factors[i].order;
    exps[i] = ((exps[i] % d) + d) % d;
  }
  return exps;
}

// e_j with zeta_{d_j}^{e_j} = zeta_{value_order}^{t}; requires the value to
// have order dividing d_j, which the callers' homomorphism properties ensure
long solve_exponent(long t, long value_order, long d_j, const char* what) {
  long tt = ((t % value_order) + value_order) % value_order;
  if (tt * d_j % value_order != 0) throw internal_error(std::string(what) + ": value order does not divide factor order");
  return tt * d_j / value_order % d_j;
}

void reject_zero_ring(const RingPtr& R, const char* what) {
  if (R->is_zero_ring())
    throw internal_error(std::string(what) + ": zero ring has no character theory here");
}

}  // namespace

// ---- additive characters ----------------------------------------------------

AdditiveCharacter::AdditiveCharacter(RingPtr ring, std::vector<long> exponents)
    : ring_(std::move(ring)),
      exps_(normalized(ring_->additive_group(), std::move(exponents))),
      order_(ring_->additive_group().exponent) {
  table_.resize(ring_->size());
  for (Elem x = 0; x < ring_->size(); ++x)
    table_[x] = static_cast<int>(add_char_exponent(*ring_, exps_, x));
}

AdditiveCharacter AdditiveCharacter::trivial(const RingPtr& ring) {
  return AdditiveCharacter(ring, std::vector<long>(ring->additive_group().factors.size(), 0));
}

bool AdditiveCharacter::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e == 0; });
}

AdditiveCharacter AdditiveCharacter::operator*(const AdditiveCharacter& o) const {
  if (ring_.get() != o.ring_.get())
    throw std::invalid_argument("character product: ring mismatch");
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return AdditiveCharacter(ring_, std::move(e));
}

AdditiveCharacter AdditiveCharacter::inverse() const {
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
  return AdditiveCharacter(ring_, std::move(e));
}

bool AdditiveCharacter::operator==(const AdditiveCharacter& o) const {
  return ring_.get() == o.ring_.get() && exps_ == o.exps_;
}

long additive_character_count(const RingPtr& R) { return R->size(); }

AdditiveCharacter additive_character_from_index(const RingPtr& R, long index) {
  reject_zero_ring(R, "additive_character_from_index");
  const GroupDecomposition& g = R->additive_group();
  if (index < 0 || index >= g.size)
    throw std::invalid_argument("additive character index out of range");
  std::vector<long> e(g.factors.size());
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] = index % g.factors[i].order;
    index /= g.factors[i].order;
  }
  return AdditiveCharacter(R, std::move(e));
}

std::vector<AdditiveCharacter> additive_characters(const RingPtr& R) {
  std::vector<AdditiveCharacter> out;
  out.reserve(R->size());
  for (long i = 0; i < R->size(); ++i) out.push_back(additive_character_from_index(R, i));
  return out;
}

AdditiveCharacter scale(const AdditiveCharacter& psi, Elem a) {
  return AdditiveCharacter(psi.ring(), add_char_scaled(*psi.ring(), psi.exponents(), a));
}

Ideal conductor(const AdditiveCharacter& psi) {
  const RingPtr& R = psi.ring();
  const GroupDecomposition& g = R->additive_group();
  std::vector<Elem> out;
  for (Elem r = 0; r < R->size(); ++r) {
    bool trivial_on_rR = true;
    for (const CyclicFactor& f : g.factors)
      if (psi.exponent_at(R->mul(r, f.generator)) != 0) {
        trivial_on_rR = false;
        break;
      }
    if (trivial_on_rR) out.push_back(r);
  }
  return Ideal{R, std::move(out)};
}

bool is_primitive(const AdditiveCharacter& psi) { return conductor(psi).is_zero(); }

FrobeniusInfo frobenius_info(const RingPtr& R) {
  reject_zero_ring(R, "frobenius_info");
  const FiniteRing::FrobeniusCache& cache =
      R->frobenius_cache([&]() -> FiniteRing::FrobeniusCache {
        FiniteRing::FrobeniusCache c;
        const GroupDecomposition& g = R->additive_group();
        long N = g.exponent;
        if (R->primitive_recipe().has_value()) {
          const PrimitiveRecipe& r = R->primitive_recipe();
          if (N % r.den != 0) throw internal_error("primitive recipe: order mismatch");
          std::vector<long> e(g.factors.size());
          for (size_t j = 0; j < e.size(); ++j) {
            long t = r.num(g.factors[j].generator) % r.den;
            e[j] = solve_exponent(t, r.den, g.factors[j].order, "primitive recipe");
          }
          AdditiveCharacter psi(R, e);
          if (!is_primitive(psi))
            throw internal_error("constructor's canonical character is not primitive");
          c.frobenius = true;
          c.witness_exponents = psi.exponents();
        } else {
          for (long i = 0; i < R->size(); ++i) {
            AdditiveCharacter psi = additive_character_from_index(R, i);
            if (is_primitive(psi)) {
              c.frobenius = true;
              c.witness_exponents = psi.exponents();
              break;
            }
          }
          if (!c.frobenius)
            c.certificate = "all " + std::to_string(R->size()) +
                            " additive characters have a nonzero conductor";
        }
        // the ideal-theoretic criterion must agree on every local factor
        bool ideal_verdict = true;
        for (const LocalFactor& f : R->local_factors())
          if (f.ring->local_structure().minimal_ideals.size() != 1) ideal_verdict = false;
        if (ideal_verdict != c.frobenius)
          throw internal_error(
              "primitive-character search and unique-minimal-ideal criterion disagree");
        return c;
      });
  FrobeniusInfo info;
  info.frobenius = cache.frobenius;
  info.certificate = cache.certificate;
  if (cache.frobenius) info.witness = AdditiveCharacter(R, cache.witness_exponents);
  return info;
}

bool is_frobenius(const RingPtr& R) { return frobenius_info(R).frobenius; }

std::optional<AdditiveCharacter> primitive_additive_character(const RingPtr& R) {
  return frobenius_info(R).witness;
}

Cyc sum_over_ideal(const AdditiveCharacter& psi, const Ideal& I, Elem c) {
  if (!is_primitive(psi)) throw std::domain_error("sum_over_ideal: character not primitive");
  const RingPtr& R = psi.ring();
  CycAccumulator acc(psi.order());
  for (Elem a : I.elements) acc.add_root(psi.exponent_at(R->mul(c, a)));
  Cyc value = acc.value();
  bool in_ann = annihilator(R, I).contains(c);
  Cyc closed = in_ann ? Cyc(I.size()) : Cyc(0);
  if (value != closed) throw internal_error("sum over ideal disagrees with closed form");
  return value;
}

AdditiveCharacter lift_character(const Quotient& q, const AdditiveCharacter& on_quotient) {
  if (on_quotient.ring().get() != q.ring.get())
    throw std::invalid_argument("lift_character: character lives on another ring");
  const GroupDecomposition& g = q.base->additive_group();
  long nq = on_quotient.order();
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    long t = on_quotient.exponent_at(q.project[g.factors[j].generator]);
    e[j] = solve_exponent(t, nq, g.factors[j].order, "lift_character");
  }
  return AdditiveCharacter(q.base, std::move(e));
}

AdditiveCharacter push_character(const Quotient& q, const AdditiveCharacter& on_base) {
  if (on_base.ring().get() != q.base.get())
    throw std::invalid_argument("push_character: character lives on another ring");
  for (Elem i : q.kernel.elements)
    if (on_base.exponent_at(i) != 0)
      throw std::domain_error("push_character: character is not trivial on the ideal");
  const GroupDecomposition& g = q.ring->additive_group();
  long nb = on_base.order();
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    long t = on_base.exponent_at(q.rep[g.factors[j].generator]);
    e[j] = solve_exponent(t, nb, g.factors[j].order, "push_character");
  }
  return AdditiveCharacter(q.ring, std::move(e));
}

AdditiveCharacter additive_factor(const AdditiveCharacter& psi, const LocalFactor& F) {
  const GroupDecomposition& g = F.ring->additive_group();
  long n = psi.order();
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    long t = psi.exponent_at(F.members[g.factors[j].generator]);
    e[j] = solve_exponent(t, n, g.factors[j].order, "additive_factor");
  }
  return AdditiveCharacter(F.ring, std::move(e));
}

AdditiveCharacter additive_product_character(const RingPtr& product,
                                             const std::vector<AdditiveCharacter>& parts) {
  const auto& layout = product->product_layout();
  if (!layout.has_value())
    throw std::invalid_argument("additive_product_character: not a product-constructed ring");
  if (layout->children.size() != parts.size())
    throw std::invalid_argument("additive_product_character: wrong number of parts");
  const GroupDecomposition& g = product->additive_group();
  long N = g.exponent;
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    Elem gen = g.factors[j].generator;
    long t = 0;  // exponent of prod_k psi_k(x_k) as a power of zeta_N
    for (size_t k = 0; k < parts.size(); ++k) {
      Elem xk = static_cast<Elem>(gen / layout->strides[k] % layout->children[k]->size());
      long tk = parts[k].exponent_at(xk);
      t = (t + tk * (N / parts[k].order())) % N;
    }
    e[j] = solve_exponent(t, N, g.factors[j].order, "additive_product_character");
  }
  return AdditiveCharacter(product, std::move(e));
}

// ---- multiplicative characters ----------------------------------------------

namespace {

long mult_char_exponent(const FiniteRing& R, const std::vector<long>& exps, Elem u) {
  const GroupDecomposition& g = R.unit_group();
  int pos = R.unit_index(u);
  if (pos < 0) throw std::domain_error("multiplicative character evaluated off the units");
  long M = g.exponent;
  long t = 0;
  const std::vector<int>& c = g.coords[pos];
  for (size_t i = 0; i < exps.size(); ++i) {
    long d = g.factors[i].order;
    long e = ((exps[i] % d) + d) % d;
    t = (t + e * (M / d) % M * c[i]) % M;
  }
  return t;
}

}  // namespace

MultiplicativeCharacter::MultiplicativeCharacter(RingPtr ring, std::vector<long> exponents)
    : ring_(std::move(ring)),
      exps_(normalized(ring_->unit_group(), std::move(exponents))),
      order_(ring_->unit_group().exponent) {
  table_.assign(ring_->size(), -1);
  for (Elem u : ring_->units())
    table_[u] = static_cast<int>(mult_char_exponent(*ring_, exps_, u));
}

MultiplicativeCharacter MultiplicativeCharacter::trivial(const RingPtr& ring) {
  return MultiplicativeCharacter(ring,
                                 std::vector<long>(ring->unit_group().factors.size(), 0));
}

long MultiplicativeCharacter::exponent_at(Elem u) const {
  if (table_[u] < 0)
    throw std::domain_error("multiplicative character evaluated off the units");
  return table_[u];
}

Cyc MultiplicativeCharacter::operator()(Elem u) const {
  return Cyc::root(order_, exponent_at(u));
}

bool MultiplicativeCharacter::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e == 0; });
}

MultiplicativeCharacter MultiplicativeCharacter::operator*(
    const MultiplicativeCharacter& o) const {
  if (ring_.get() != o.ring_.get())
    throw std::invalid_argument("character product: ring mismatch");
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return MultiplicativeCharacter(ring_, std::move(e));
}

MultiplicativeCharacter MultiplicativeCharacter::inverse() const {
  std::vector<long> e(exps_.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
  return MultiplicativeCharacter(ring_, std::move(e));
}

MultiplicativeCharacter MultiplicativeCharacter::pow(long k) const {
  std::vector<long> e(exps_.size());
  const GroupDecomposition& g = ring_->unit_group();
  for (size_t i = 0; i < e.size(); ++i) {
    long d = g.factors[i].order;
    e[i] = ((exps_[i] * (k % d)) % d + d) % d;
  }
  return MultiplicativeCharacter(ring_, std::move(e));
}

bool MultiplicativeCharacter::operator==(const MultiplicativeCharacter& o) const {
  return ring_.get() == o.ring_.get() && exps_ == o.exps_;
}

long multiplicative_character_count(const RingPtr& R) {
  return static_cast<long>(R->units().size());
}

MultiplicativeCharacter multiplicative_character_from_index(const RingPtr& R, long index) {
  reject_zero_ring(R, "multiplicative_character_from_index");
  const GroupDecomposition& g = R->unit_group();
  if (index < 0 || index >= g.size)
    throw std::invalid_argument("multiplicative character index out of range");
  std::vector<long> e(g.factors.size());
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] = index % g.factors[i].order;
    index /= g.factors[i].order;
  }
  return MultiplicativeCharacter(R, std::move(e));
}

std::vector<MultiplicativeCharacter> multiplicative_characters(const RingPtr& R) {
  std::vector<MultiplicativeCharacter> out;
  long n = multiplicative_character_count(R);
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(multiplicative_character_from_index(R, i));
  return out;
}

Ideal conductor(const MultiplicativeCharacter& chi) {
  const RingPtr& R = chi.ring();
  const LocalStructure& ls = R->local_structure();
  if (!ls.is_local)
    throw std::domain_error("multiplicative conductor is defined for local rings only");
  if (chi.is_trivial()) return full_ideal(R);
  std::vector<Elem> out;
  for (Elem r : ls.maximal_ideal->elements) {
    bool trivial_on = true;
    for (Elem i : principal_ideal(R, r).elements)
      if (chi.exponent_at(R->add(R->one(), i)) != 0) {
        trivial_on = false;
        break;
      }
    if (trivial_on) out.push_back(r);
  }
  Ideal c{R, std::move(out)};
  if (!is_ideal(R, c.elements))
    throw internal_error("multiplicative conductor is not an ideal");
  return c;
}

bool is_primitive(const MultiplicativeCharacter& chi) { return conductor(chi).is_zero(); }

MultiplicativeCharacter quadratic_character(const RingPtr& R) {
  if (!R->local_structure().is_local)
    throw std::domain_error("quadratic character requires a local ring");
  if (R->characteristic() % 2 == 0)
    throw std::domain_error("quadratic character requires odd characteristic");
  const GroupDecomposition& g = R->unit_group();
  std::optional<MultiplicativeCharacter> found;
  long combos = 1;
  for (const auto& f : g.factors) combos *= (f.order % 2 == 0) ? 2 : 1;
  for (long mask = 1; mask < combos; ++mask) {
    std::vector<long> e(g.factors.size(), 0);
    long rest = mask;
    for (size_t i = 0; i < g.factors.size(); ++i) {
      if (g.factors[i].order % 2 != 0) continue;
      if (rest % 2) e[i] = g.factors[i].order / 2;
      rest /= 2;
    }
    if (std::all_of(e.begin(), e.end(), [](long v) { return v == 0; })) continue;
    MultiplicativeCharacter chi(R, std::move(e));
    if (found.has_value())
      throw internal_error("order-2 multiplicative character is not unique");
    found = std::move(chi);
  }
  if (!found.has_value())
    throw internal_error("no order-2 multiplicative character found");

  // kernel must be exactly the unit squares
  const auto& sq = R->unit_squares();
  for (Elem u : R->units()) {
    bool square = std::binary_search(sq.begin(), sq.end(), u);
    long t = found->exponent_at(u);
    if (square != (t == 0))
      throw internal_error("quadratic character kernel differs from the unit squares");
    if (t != 0 && Cyc::root(found->order(), t) != Cyc(-1))
      throw internal_error("quadratic character takes a value other than +-1");
  }
  return *found;
}

long count_unit_solutions(const RingPtr& R, Elem b, Elem c) {
  if (!R->is_unit(c)) throw std::domain_error("count_unit_solutions: c must be a unit");
  long count = 0;
  for (Elem u : R->units()) {
    Elem v = R->sub(b, u);
    if (R->is_unit(v) && R->mul(u, v) == c) ++count;
  }
  return count;
}

MultiplicativeCharacter lift_character(const Quotient& q,
                                       const MultiplicativeCharacter& on_quotient) {
  if (on_quotient.ring().get() != q.ring.get())
    throw std::invalid_argument("lift_character: character lives on another ring");
  if (!q.base->local_structure().is_local)
    throw std::domain_error("multiplicative lift is defined over local rings");
  const GroupDecomposition& g = q.base->unit_group();
  long mq = on_quotient.order();
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    Elem u = q.base->units()[g.factors[j].generator];
    long t = on_quotient.exponent_at(q.project[u]);
    e[j] = solve_exponent(t, mq, g.factors[j].order, "lift_character (multiplicative)");
  }
  return MultiplicativeCharacter(q.base, std::move(e));
}

MultiplicativeCharacter push_character(const Quotient& q,
                                       const MultiplicativeCharacter& on_base) {
  if (on_base.ring().get() != q.base.get())
    throw std::invalid_argument("push_character: character lives on another ring");
  if (!q.base->local_structure().is_local)
    throw std::domain_error("multiplicative push is defined over local rings");
  for (Elem i : q.kernel.elements)
    if (on_base.exponent_at(q.base->add(q.base->one(), i)) != 0)
      throw std::domain_error("push_character: character is not trivial on 1+I");
  const GroupDecomposition& g = q.ring->unit_group();
  long mb = on_base.order();
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    Elem ubar = q.ring->units()[g.factors[j].generator];
    Elem rep = q.rep[ubar];
    long t = on_base.exponent_at(rep);
    e[j] = solve_exponent(t, mb, g.factors[j].order, "push_character (multiplicative)");
  }
  return MultiplicativeCharacter(q.ring, std::move(e));
}

MultiplicativeCharacter multiplicative_factor(const MultiplicativeCharacter& chi,
                                              const LocalFactor& F) {
  const RingPtr& R = chi.ring();
  const GroupDecomposition& g = F.ring->unit_group();
  long m = chi.order();
  Elem complement = R->sub(R->one(), F.idempotent);
  std::vector<long> e(g.factors.size());
  for (size_t j = 0; j < e.size(); ++j) {
    Elem uf = F.ring->units()[g.factors[j].generator];
    Elem embedded = R->add(F.members[uf], complement);
    long t = chi.exponent_at(embedded);
    e[j] = solve_exponent(t, m, g.factors[j].order, "multiplicative_factor");
  }
  return MultiplicativeCharacter(F.ring, std::move(e));
}

}  // namespace kloos

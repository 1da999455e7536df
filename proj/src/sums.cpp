#include "kloos/sums.hpp"

#include "kloos/ringspec.hpp"

namespace kloos::sums {

namespace {

thread_local bool perturb_armed = false;

bool consume_perturbation() {
  bool armed = perturb_armed;
  perturb_armed = false;
  return armed;
}

AdditiveCharacter require_primitive(const RingPtr& R, const char* what) {
  auto psi = primitive_additive_character(R);
  if (!psi.has_value())
    throw std::domain_error(std::string(what) + ": ring is not Frobenius");
  return *psi;
}

}  // namespace

PerturbationGuard::PerturbationGuard() { perturb_armed = true; }
PerturbationGuard::~PerturbationGuard() { perturb_armed = false; }

Cyc kloosterman(const AdditiveCharacter& phi, const AdditiveCharacter& psi) {
  const RingPtr& R = phi.ring();
  if (R.get() != psi.ring().get())
    throw std::invalid_argument("kloosterman: characters of different rings");
  bool perturb = consume_perturbation();
  CycAccumulator acc(phi.order());
  for (Elem u : R->units()) {
    long t = (phi.exponent_at(u) + psi.exponent_at(R->inverse(u))) % phi.order();
    if (perturb) {
      acc.add_root(t + 1);
      perturb = false;
    } else {
      acc.add_root(t);
    }
  }
  return acc.value();
}

Cyc kloosterman_param(const RingPtr& R, Elem a) {
  AdditiveCharacter psi = require_primitive(R, "kloosterman_param");
  return kloosterman(psi, scale(psi, a));
}

Cyc twisted_kloosterman(const RingPtr& R, const MultiplicativeCharacter& tau, Elem a,
                        const AdditiveCharacter* primitive_override) {
  if (tau.ring().get() != R.get())
    throw std::invalid_argument("twisted_kloosterman: twist lives on another ring");
  AdditiveCharacter psi = primitive_override
                              ? *primitive_override
                              : require_primitive(R, "twisted_kloosterman");
  if (psi.ring().get() != R.get())
    throw std::invalid_argument("twisted_kloosterman: character lives on another ring");
  if (!is_primitive(psi))
    throw std::invalid_argument("twisted_kloosterman: override character not primitive");

  long n_add = psi.order();
  long n_mul = tau.order();
  long l = lcm_order(n_add, n_mul);
  bool perturb = consume_perturbation();
  CycAccumulator acc(l);
  for (Elem u : R->units()) {
    Elem arg = R->add(u, R->mul(a, R->inverse(u)));
    long t = psi.exponent_at(arg) * (l / n_add) + tau.exponent_at(u) * (l / n_mul);
    if (perturb) {
      acc.add_root(t + 1);
      perturb = false;
    } else {
      acc.add_root(t);
    }
  }
  return acc.value();
}

Cyc gauss(const AdditiveCharacter& psi, const MultiplicativeCharacter& chi) {
  const RingPtr& R = psi.ring();
  if (R.get() != chi.ring().get())
    throw std::invalid_argument("gauss: characters of different rings");
  long l = lcm_order(psi.order(), chi.order());
  CycAccumulator acc(l);
  for (Elem u : R->units())
    acc.add_root(psi.exponent_at(u) * (l / psi.order()) +
                 chi.exponent_at(u) * (l / chi.order()));
  return acc.value();
}

Cyc gauss(const RingPtr& R, const MultiplicativeCharacter& chi) {
  return gauss(require_primitive(R, "gauss"), chi);
}

Cyc jacobi_generalized(Elem a, const MultiplicativeCharacter& chi,
                       const MultiplicativeCharacter& eta) {
  const RingPtr& R = chi.ring();
  if (R.get() != eta.ring().get())
    throw std::invalid_argument("jacobi: characters of different rings");
  long l = lcm_order(chi.order(), eta.order());
  CycAccumulator acc(l);
  for (Elem u : R->units()) {
    Elem v = R->sub(a, u);
    if (!R->is_unit(v)) continue;
    acc.add_root(chi.exponent_at(u) * (l / chi.order()) +
                 eta.exponent_at(v) * (l / eta.order()));
  }
  return acc.value();
}

Cyc jacobi(const MultiplicativeCharacter& chi, const MultiplicativeCharacter& eta) {
  return jacobi_generalized(chi.ring()->one(), chi, eta);
}

Cyc classical_kloosterman(long m, long n, long q) {
  if (q < 2) throw std::invalid_argument("classical_kloosterman: q must be >= 2");
  RingPtr R = make_zmod(q);
  AdditiveCharacter e_q = *primitive_additive_character(R);
  auto reduce = [q](long v) { return static_cast<Elem>(((v % q) + q) % q); };
  return kloosterman(scale(e_q, reduce(m)), scale(e_q, reduce(n)));
}

}  // namespace kloos::sums

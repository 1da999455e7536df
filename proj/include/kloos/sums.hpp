#pragma once

#include "kloos/characters.hpp"

namespace kloos::sums {

// While alive, the next Kloosterman-family evaluation multiplies its first
// summand by a primitive root of unity (one-shot). Lets the verification
// harness demonstrate that its checks can actually fail.
class PerturbationGuard {
public:
  PerturbationGuard();
  ~PerturbationGuard();
  PerturbationGuard(const PerturbationGuard&) = delete;
  PerturbationGuard& operator=(const PerturbationGuard&) = delete;
};

// K(phi, psi) = sum over units of phi(u) psi(u^{-1})
Cyc kloosterman(const AdditiveCharacter& phi, const AdditiveCharacter& psi);

// K(a) = K(psi, a.psi) with the ring's canonical primitive character
Cyc kloosterman_param(const RingPtr& R, Elem a);

// K_tau(a) = sum over units of tau(u) psi(u + a u^{-1}); psi defaults to the
// canonical primitive character, an override supports base-change testing
Cyc twisted_kloosterman(const RingPtr& R, const MultiplicativeCharacter& tau, Elem a,
                        const AdditiveCharacter* primitive_override = nullptr);

// G(psi, chi) = sum over units of psi(u) chi(u)
Cyc gauss(const AdditiveCharacter& psi, const MultiplicativeCharacter& chi);
// with the canonical primitive character
Cyc gauss(const RingPtr& R, const MultiplicativeCharacter& chi);

// J(chi, eta) = sum over unit pairs u+v=1 of chi(u) eta(v); J_a sums over u+v=a
Cyc jacobi(const MultiplicativeCharacter& chi, const MultiplicativeCharacter& eta);
Cyc jacobi_generalized(Elem a, const MultiplicativeCharacter& chi,
                       const MultiplicativeCharacter& eta);

// S(m, n; q) over Z/q
Cyc classical_kloosterman(long m, long n, long q);

}  // namespace kloos::sums

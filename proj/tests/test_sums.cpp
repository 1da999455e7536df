#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kloos/ringspec.hpp"
#include "kloos/sums.hpp"
#include "oracle.hpp"

using namespace kloos;
using namespace kloos::sums;

namespace {

// float evaluation of the same sums, used as the independent numeric oracle
std::complex<double> kloosterman_float(const RingPtr& R, const AdditiveCharacter& phi,
                                       const AdditiveCharacter& psi) {
  std::complex<double> acc(0, 0);
  for (Elem u : R->units())
    acc += oracle::root(phi.exponent_at(u), phi.order()) *
           oracle::root(psi.exponent_at(R->inverse(u)), psi.order());
  return acc;
}

std::complex<double> twisted_float(const RingPtr& R, const MultiplicativeCharacter& tau,
                                   const AdditiveCharacter& psi, Elem a) {
  std::complex<double> acc(0, 0);
  for (Elem u : R->units()) {
    Elem arg = R->add(u, R->mul(a, R->inverse(u)));
    acc += oracle::root(tau.exponent_at(u), tau.order()) *
           oracle::root(psi.exponent_at(arg), psi.order());
  }
  return acc;
}

}  // namespace

TEST_CASE("hand-checked Kloosterman values on Z/4") {
  RingPtr R = make_ring("Z/4");
  auto psi = *primitive_additive_character(R);
  CHECK(kloosterman(psi, scale(psi, 1)) == Cyc(-2));
  CHECK(kloosterman(psi, scale(psi, 2)) == Cyc(0));
  auto one = AdditiveCharacter::trivial(R);
  CHECK(kloosterman(one, one) == Cyc(2));  // |units|
  CHECK(kloosterman_param(R, 3) == Cyc(2));
}

TEST_CASE("parameterized values over local rings") {
  RingPtr R9 = make_ring("Z/9");
  CHECK(kloosterman_param(R9, 3) == Cyc(0));  // nonzero non-unit
  CHECK(kloosterman_param(R9, 6) == Cyc(0));
  CHECK(kloosterman_param(R9, 0) == Cyc(0));
  CHECK(kloosterman_param(make_ring("GF(5)"), 0) == Cyc(-1));
  CHECK_THROWS_AS(kloosterman_param(make_ring("sqz(2,2)"), 1), std::domain_error);
}

TEST_CASE("Ramanujan values: K(psi, 1) over local rings") {
  for (const char* spec : {"Z/8", "Z/9", "GF(4)", "Fp[3;0,0,1]"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    const Ideal& M = *R->local_structure().maximal_ideal;
    auto one = AdditiveCharacter::trivial(R);
    for (const auto& psi : additive_characters(R)) {
      bool trivial_on_m = true;
      for (Elem i : M.elements)
        if (psi.exponent_at(i) != 0) trivial_on_m = false;
      Cyc expected = trivial_on_m
                         ? Cyc((psi.is_trivial() ? R->size() : 0) - M.size())
                         : Cyc(0);
      CHECK(kloosterman(psi, one) == expected);
    }
  }
}

TEST_CASE("reality, symmetry, unit shifting") {
  for (const char* spec : {"Z/8", "Z/9", "Z/12", "GF(4)", "triv(Z/2)", "sqz(2,2)"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    auto chars = additive_characters(R);
    for (const auto& phi : chars)
      for (const auto& psi : chars) {
        Cyc k = kloosterman(phi, psi);
        CHECK(k.conj() == k);                       // real
        CHECK(kloosterman(psi, phi) == k);          // symmetric
      }
    auto psi0 = chars[R->size() - 1];
    for (Elem a : R->units())
      CHECK(kloosterman(psi0, scale(chars[1], a)) ==
            kloosterman(scale(psi0, a), chars[1]));
  }
}

TEST_CASE("factorization over product rings") {
  RingPtr P = make_ring("Z/12");
  const auto& fs = P->local_factors();
  auto chars = additive_characters(P);
  for (const auto& phi : chars)
    for (const auto& psi : chars) {
      Cyc whole = kloosterman(phi, psi);
      Cyc prod(1);
      for (const auto& f : fs)
        prod = prod * kloosterman(additive_factor(phi, f), additive_factor(psi, f));
      CHECK(whole == prod);
    }
}

TEST_CASE("Gauss and Jacobi sums factor over product rings") {
  RingPtr P = make_ring("Z/4 x GF(3)");
  const auto& fs = P->local_factors();
  auto psi = *primitive_additive_character(P);
  for (const auto& chi : multiplicative_characters(P)) {
    Cyc whole = gauss(psi, chi);
    Cyc prod(1);
    for (const auto& f : fs)
      prod = prod * gauss(additive_factor(psi, f), multiplicative_factor(chi, f));
    CHECK(whole == prod);
  }
  for (const auto& chi : multiplicative_characters(P))
    for (const auto& eta : multiplicative_characters(P)) {
      Cyc whole = jacobi(chi, eta);
      Cyc prod(1);
      for (const auto& f : fs)
        prod = prod * jacobi(multiplicative_factor(chi, f), multiplicative_factor(eta, f));
      CHECK(whole == prod);
    }
}

TEST_CASE("vanishing and reduction by conductors over local rings") {
  for (const char* spec : {"Z/8", "Z/9", "Z/27", "Fp[3;0,0,1]"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    auto chars = additive_characters(R);
    for (const auto& phi : chars) {
      if (phi.is_trivial()) continue;
      for (const auto& psi : chars) {
        if (psi.is_trivial()) continue;
        Ideal cp = conductor(phi), cq = conductor(psi);
        Cyc k = kloosterman(phi, psi);
        if (!cp.same_set(cq)) {
          CHECK(k == Cyc(0));  // different conductors vanish
        } else {
          Quotient q = quotient_ring(R, cp);
          Cyc reduced = kloosterman(push_character(q, phi), push_character(q, psi));
          CHECK(k == Cyc(cp.size()) * reduced);
        }
      }
    }
  }
}

TEST_CASE("twisted sums: definition edge cases") {
  RingPtr R9 = make_ring("Z/9");
  MultiplicativeCharacter sigma = quadratic_character(R9);
  CHECK(twisted_kloosterman(R9, sigma, 3) == Cyc(0));  // non-unit
  CHECK(twisted_kloosterman(R9, sigma, 5) == Cyc(0));  // non-square unit
  CHECK(twisted_kloosterman(R9, sigma, 0) == gauss(R9, sigma));
  for (const auto& tau : multiplicative_characters(R9))
    CHECK(twisted_kloosterman(R9, tau, 0) == gauss(R9, tau));
  // trivial twist recovers the plain sums
  for (Elem a = 0; a < 9; ++a)
    CHECK(twisted_kloosterman(R9, MultiplicativeCharacter::trivial(R9), a) ==
          kloosterman_param(R9, a));
}

TEST_CASE("conjugation formulas for twisted sums") {
  for (const char* spec : {"Z/9", "Z/8", "GF(5)", "triv(Z/4)", "Z/12"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    for (const auto& tau : multiplicative_characters(R)) {
      Cyc tau_minus1 = tau(R->neg(R->one()));
      for (Elem a = 0; a < R->size(); ++a) {
        Cyc k = twisted_kloosterman(R, tau, a);
        CHECK(k.conj() == tau_minus1 * twisted_kloosterman(R, tau.inverse(), a));
        if (R->is_unit(a))
          CHECK(k.conj() == tau(R->neg(R->inverse(a))) * k);
      }
    }
  }
}

TEST_CASE("base change of the primitive character") {
  RingPtr R = make_ring("Z/9");
  auto psi = *primitive_additive_character(R);
  for (const auto& tau : multiplicative_characters(R))
    for (Elem c : R->units()) {
      AdditiveCharacter rho = scale(psi, c);
      Elem c2a_factor = R->mul(c, c);
      for (Elem a = 0; a < R->size(); ++a) {
        Cyc lhs = twisted_kloosterman(R, tau, a, &rho);
        Cyc rhs = tau.inverse()(c) * twisted_kloosterman(R, tau, R->mul(c2a_factor, a));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("hand-checked Gauss sums") {
  RingPtr F3 = make_ring("GF(3)");
  MultiplicativeCharacter s3 = quadratic_character(F3);
  Cyc g = gauss(F3, s3);
  CHECK(g * g == Cyc(-3));
  CHECK(g * g == s3(F3->neg(1)) * Cyc(3));

  RingPtr R9 = make_ring("Z/9");
  CHECK(gauss(R9, MultiplicativeCharacter::trivial(R9)) == Cyc(0));
  for (const auto& chi : multiplicative_characters(R9)) {
    Cyc gs = gauss(R9, chi);
    if (is_primitive(chi)) {
      CHECK(gs * gs.conj() == Cyc(9));
      CHECK(gauss(R9, chi) * gauss(R9, chi.inverse()) == chi(R9->neg(1)) * Cyc(9));
    } else {
      CHECK(gs == Cyc(0));  // trivial or imprimitive on a non-field
    }
  }
}

TEST_CASE("hand-checked Jacobi sums") {
  RingPtr F5 = make_ring("GF(5)");
  MultiplicativeCharacter s5 = quadratic_character(F5);
  CHECK(jacobi(s5, s5) == Cyc(-1));

  auto one = MultiplicativeCharacter::trivial(F5);
  long pairs = 0;
  for (Elem u : F5->units())
    if (F5->is_unit(F5->sub(1, u))) ++pairs;
  CHECK(jacobi(one, one) == Cyc(pairs));

  RingPtr R9 = make_ring("Z/9");
  for (const auto& chi : multiplicative_characters(R9))
    for (const auto& eta : multiplicative_characters(R9)) {
      if (!is_primitive(chi) || !is_primitive(eta)) continue;
      MultiplicativeCharacter prod = chi * eta;
      if (!is_primitive(prod)) continue;
      CHECK(gauss(R9, chi) * gauss(R9, eta) == jacobi(chi, eta) * gauss(R9, prod));
    }
}

TEST_CASE("generalized Jacobi sums rescale by units") {
  RingPtr R9 = make_ring("Z/9");
  auto chars = multiplicative_characters(R9);
  for (const auto& chi : chars)
    for (const auto& eta : chars) {
      Cyc j1 = jacobi(chi, eta);
      for (Elem a : R9->units())
        CHECK(jacobi_generalized(a, chi, eta) == (chi * eta)(a)*j1);
    }
}

TEST_CASE("classical sums") {
  Cyc s = classical_kloosterman(1, 1, 5);
  CHECK(oracle::sum_matches(s.to_complex(), oracle::classical_kloosterman(1, 1, 5)));
  CHECK(std::abs(s.to_complex().real() - 0.38196601125) < 1e-9);

  CHECK(classical_kloosterman(0, 0, 12) == Cyc(4));  // phi(12)
  CHECK(classical_kloosterman(0, 0, 9) == Cyc(6));

  for (long q : {5, 8, 12}) {
    for (long m = 0; m < q; ++m)
      for (long n = 0; n < q; ++n) {
        Cyc v = classical_kloosterman(m, n, q);
        CHECK(v == classical_kloosterman(n, m, q));
        CHECK(oracle::sum_matches(v.to_complex(), oracle::classical_kloosterman(m, n, q)));
      }
  }
  CHECK_THROWS(classical_kloosterman(1, 1, 1));
}

TEST_CASE("float oracle sweep over the small rings") {
  for (const char* spec :
       {"Z/4", "Z/8", "Z/9", "Z/12", "GF(4)", "GF(5)", "Fp[3;0,0,1]", "triv(Z/2)",
        "triv(Z/4)", "sqz(2,2)"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);

    // all K(phi, psi), including non-Frobenius rings
    auto chars = additive_characters(R);
    for (const auto& phi : chars)
      for (const auto& psi : chars)
        CHECK(oracle::sum_matches(kloosterman(phi, psi).to_complex(),
                                  kloosterman_float(R, phi, psi)));

    if (!is_frobenius(R)) continue;
    auto psi0 = *primitive_additive_character(R);
    for (const auto& tau : multiplicative_characters(R))
      for (Elem a = 0; a < R->size(); ++a)
        CHECK(oracle::sum_matches(twisted_kloosterman(R, tau, a).to_complex(),
                                  twisted_float(R, tau, psi0, a)));
  }
}

TEST_CASE("perturbation guard mutates exactly one evaluation") {
  RingPtr R9 = make_ring("Z/9");
  Cyc clean = kloosterman_param(R9, 1);
  {
    PerturbationGuard guard;
    Cyc dirty = kloosterman_param(R9, 1);
    CHECK(dirty != clean);
    CHECK(kloosterman_param(R9, 1) == clean);  // one-shot
  }
  CHECK(kloosterman_param(R9, 1) == clean);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kloos/characters.hpp"
#include "kloos/ringspec.hpp"
#include "oracle.hpp"

using namespace kloos;

namespace {

const std::vector<const char*> kSmallRings = {
    "Z/4", "Z/8", "Z/9", "Z/12", "GF(3)", "GF(4)", "GF(9)",
    "Fp[3;0,0,1]", "triv(Z/2)", "triv(Z/4)", "sqz(2,2)", "sqz(3,1)"};

}  // namespace

TEST_CASE("additive character counts and orthogonality") {
  for (const char* spec : kSmallRings) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    auto chars = additive_characters(R);
    CHECK(static_cast<int>(chars.size()) == R->size());

    // pairwise distinct as functions
    std::set<std::vector<long>> distinct;
    for (const auto& psi : chars) distinct.insert(psi.exponents());
    CHECK(static_cast<int>(distinct.size()) == R->size());

    for (const auto& psi : chars) {
      Cyc total(0);
      for (Elem x = 0; x < R->size(); ++x) total = total + psi(x);
      CHECK(total == (psi.is_trivial() ? Cyc(R->size()) : Cyc(0)));
      // homomorphism spot check
      for (Elem x = 0; x < R->size(); ++x)
        for (Elem y = 0; y < R->size(); ++y)
          CHECK(psi.exponent_at(R->add(x, y)) ==
                (psi.exponent_at(x) + psi.exponent_at(y)) % psi.order());
    }

    // second orthogonality: sum over characters at a fixed element
    for (Elem x = 0; x < R->size(); ++x) {
      Cyc total(0);
      for (const auto& psi : chars) total = total + psi(x);
      CHECK(total == (x == 0 ? Cyc(R->size()) : Cyc(0)));
    }
  }
}

TEST_CASE("product-ring characters are products of factor characters") {
  RingPtr P = make_ring("Z/4 x GF(3)");
  auto chars = additive_characters(P);
  CHECK(chars.size() == 12);
  const auto& factors = P->local_factors();
  REQUIRE(factors.size() == 2);
  for (const auto& psi : chars) {
    auto p1 = additive_factor(psi, factors[0]);
    auto p2 = additive_factor(psi, factors[1]);
    for (Elem x = 0; x < P->size(); ++x) {
      Cyc expected = p1(factors[0].project[x]) * p2(factors[1].project[x]);
      CHECK(psi(x) == expected);
    }
  }
}

TEST_CASE("scaling: conductor of a.psi is the annihilator of (a)") {
  RingPtr R8 = make_ring("Z/8");
  auto psi = primitive_additive_character(R8);
  REQUIRE(psi.has_value());
  CHECK(scale(*psi, 1) == *psi);
  Ideal c4 = conductor(scale(*psi, 4));
  CHECK(c4.elements == std::vector<Elem>{0, 2, 4, 6});
  CHECK(c4.same_set(principal_ideal(R8, 2)));
  for (Elem a = 0; a < 8; ++a)
    CHECK(conductor(scale(*psi, a)).same_set(annihilator(R8, principal_ideal(R8, a))));
}

TEST_CASE("scaling a primitive character is a bijection onto the dual") {
  for (const char* spec : {"Z/9", "Z/8", "GF(4)", "triv(Z/4)", "Z/12"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    auto psi = primitive_additive_character(R);
    REQUIRE(psi.has_value());
    std::set<std::vector<long>> images;
    for (Elem a = 0; a < R->size(); ++a) {
      AdditiveCharacter s = scale(*psi, a);
      images.insert(s.exponents());
      CHECK(is_primitive(s) == R->is_unit(a));
      // pointwise: (a.psi)(r) = psi(ar)
      for (Elem r = 0; r < R->size(); ++r)
        CHECK(s.exponent_at(r) == psi->exponent_at(R->mul(a, r)));
    }
    CHECK(static_cast<int>(images.size()) == R->size());
  }
}

TEST_CASE("conductors of canonical characters") {
  RingPtr R9 = make_ring("Z/9");
  auto psi = primitive_additive_character(R9);
  REQUIRE(psi.has_value());
  CHECK(conductor(*psi).is_zero());

  RingPtr F4 = make_ring("GF(4)");
  for (const auto& chi : additive_characters(F4))
    if (!chi.is_trivial()) CHECK(is_primitive(chi));

  CHECK(conductor(AdditiveCharacter::trivial(R9)).is_full());
}

TEST_CASE("conductor of a product character is the product of conductors") {
  RingPtr P = make_ring("Z/4 x GF(3)");
  const auto& layout = P->product_layout();
  REQUIRE(layout.has_value());
  RingPtr A = layout->children[0], B = layout->children[1];
  for (long i = 0; i < A->size(); ++i)
    for (long j = 0; j < B->size(); ++j) {
      auto pa = additive_character_from_index(A, i);
      auto pb = additive_character_from_index(B, j);
      auto prod = additive_product_character(P, {pa, pb});
      Ideal ca = conductor(pa), cb = conductor(pb), cp = conductor(prod);
      // embed the factor conductors into the product and compare
      std::set<Elem> expect;
      for (Elem x : ca.elements)
        for (Elem y : cb.elements)
          expect.insert(static_cast<Elem>(x * layout->strides[0] + y * layout->strides[1]));
      CHECK(cp.elements == std::vector<Elem>(expect.begin(), expect.end()));
      CHECK(is_primitive(prod) == (is_primitive(pa) && is_primitive(pb)));
    }
}

TEST_CASE("Frobenius detection") {
  for (long n = 2; n <= 64; ++n)
    CHECK(is_frobenius(make_zmod(n)));
  CHECK(is_frobenius(make_ring("triv(Z/2)")));
  CHECK(is_frobenius(make_ring("triv(Z/4)")));
  CHECK(is_frobenius(make_ring("GF(4)")));
  CHECK(is_frobenius(make_ring("Fp[3;0,0,1]")));
  CHECK(is_frobenius(make_ring("sqz(3,1)")));
  CHECK(is_frobenius(make_ring("Z/4 x GF(3)")));

  FrobeniusInfo bad = frobenius_info(make_ring("sqz(2,2)"));
  CHECK(!bad.frobenius);
  CHECK(!bad.witness.has_value());
  CHECK(bad.certificate.find("8") != std::string::npos);
  CHECK(!is_frobenius(make_ring("sqz(3,2)")));
}

TEST_CASE("canonical primitive character of standard constructions") {
  // Z/q: the q-scaled exponential r -> zeta_q^r
  RingPtr R9 = make_ring("Z/9");
  auto e9 = primitive_additive_character(R9);
  REQUIRE(e9.has_value());
  for (Elem r = 0; r < 9; ++r) CHECK((*e9)(r) == Cyc::root(9, r));

  // GF/polynomial quotients: top-coefficient functional composed with e_p
  RingPtr F9 = make_ring("GF(9)");
  auto psi9 = primitive_additive_character(F9);
  REQUIRE(psi9.has_value());
  for (Elem x = 0; x < 9; ++x) CHECK((*psi9)(x) == Cyc::root(3, x / 3));

  // trivial extension: (r, l) -> l(1)
  RingPtr T = make_ring("triv(Z/4)");
  auto rho = primitive_additive_character(T);
  REQUIRE(rho.has_value());
  CHECK(is_primitive(*rho));
  for (Elem x = 0; x < T->size(); ++x) {
    long lam = x % 4;  // character exponent vector of Z/4, single factor
    CHECK((*rho)(x) == Cyc::root(4, lam));
  }

  CHECK(!primitive_additive_character(make_ring("sqz(2,2)")).has_value());
}

TEST_CASE("sum over an ideal against a primitive character") {
  RingPtr R8 = make_ring("Z/8");
  auto psi = primitive_additive_character(R8);
  Ideal I = principal_ideal(R8, 2);
  CHECK(sum_over_ideal(*psi, I, 0) == Cyc(4));
  CHECK(sum_over_ideal(*psi, I, 4) == Cyc(4));  // 4*(2) = 0
  CHECK(sum_over_ideal(*psi, I, 1) == Cyc(0));
  AdditiveCharacter non_prim = scale(*psi, 2);
  CHECK_THROWS_AS(sum_over_ideal(non_prim, I, 1), std::domain_error);
}

TEST_CASE("multiplicative character counts and orthogonality") {
  for (const char* spec : kSmallRings) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    auto chars = multiplicative_characters(R);
    CHECK(chars.size() == R->units().size());
    std::set<std::vector<long>> distinct;
    for (const auto& chi : chars) distinct.insert(chi.exponents());
    CHECK(distinct.size() == chars.size());
    for (const auto& chi : chars) {
      Cyc total(0);
      for (Elem u : R->units()) total = total + chi(u);
      CHECK(total == (chi.is_trivial() ? Cyc(static_cast<long>(R->units().size())) : Cyc(0)));
      for (Elem u : R->units())
        for (Elem v : R->units())
          CHECK(chi.exponent_at(R->mul(u, v)) ==
                (chi.exponent_at(u) + chi.exponent_at(v)) % chi.order());
    }
  }
}

TEST_CASE("unit group shapes") {
  CHECK(multiplicative_characters(make_ring("Z/9")).size() == 6);
  CHECK(multiplicative_characters(make_ring("GF(2)")).size() == 1);
  RingPtr R8 = make_ring("Z/8");
  auto chars8 = multiplicative_characters(R8);
  CHECK(chars8.size() == 4);
  for (const auto& chi : chars8) CHECK(chi.pow(2).is_trivial());  // C2 x C2
}

TEST_CASE("multiplicative conductors") {
  RingPtr R9 = make_ring("Z/9");
  MultiplicativeCharacter sigma = quadratic_character(R9);
  CHECK(conductor(sigma).same_set(principal_ideal(R9, 3)));
  CHECK(conductor(MultiplicativeCharacter::trivial(R9)).is_full());

  long primitive_count = 0;
  for (const auto& chi : multiplicative_characters(R9))
    if (is_primitive(chi)) ++primitive_count;
  CHECK(primitive_count == 4);  // |units| (1 - 1/|ann(M)|) = 6 * 2/3

  CHECK_THROWS_AS(conductor(MultiplicativeCharacter::trivial(make_ring("Z/12"))),
                  std::domain_error);

  // non-field local Frobenius: primitive iff nontrivial on 1 + ann(M)
  const LocalStructure& ls = R9->local_structure();
  Ideal mperp = annihilator(R9, *ls.maximal_ideal);
  for (const auto& chi : multiplicative_characters(R9)) {
    bool nontrivial_on = false;
    for (Elem i : mperp.elements)
      if (chi.exponent_at(R9->add(1, i)) != 0) nontrivial_on = true;
    CHECK(is_primitive(chi) == nontrivial_on);
  }
}

TEST_CASE("local ring admits a primitive multiplicative character iff Frobenius") {
  for (const char* spec : {"Z/9", "Z/8", "GF(4)", "sqz(2,2)", "sqz(3,1)", "triv(Z/4)"}) {
    CAPTURE(spec);
    RingPtr R = make_ring(spec);
    bool has_primitive = false;
    for (const auto& chi : multiplicative_characters(R))
      if (is_primitive(chi)) has_primitive = true;
    CHECK(has_primitive == is_frobenius(R));
  }
}

TEST_CASE("quadratic character") {
  RingPtr R9 = make_ring("Z/9");
  MultiplicativeCharacter sigma = quadratic_character(R9);
  CHECK(sigma(1) == Cyc(1));
  CHECK(sigma(4) == Cyc(1));
  CHECK(sigma(5) == Cyc(-1));
  CHECK(sigma.pow(2).is_trivial());

  // unique order-2 character
  long order2 = 0;
  for (const auto& chi : multiplicative_characters(R9))
    if (!chi.is_trivial() && chi.pow(2).is_trivial()) ++order2;
  CHECK(order2 == 1);

  // |1+M| is odd on odd-characteristic local rings
  for (const char* spec : {"Z/9", "Z/25", "Z/27", "GF(9)", "Fp[3;0,0,1]", "sqz(3,2)"}) {
    RingPtr R = make_ring(spec);
    long count = 0;
    for (Elem i : R->local_structure().maximal_ideal->elements)
      if (R->is_unit(R->add(R->one(), i))) ++count;
    CHECK(count % 2 == 1);
    CHECK(count == R->local_structure().maximal_ideal->size());
  }

  // y^2 = c has 1 + sigma(c) solutions, checked exhaustively on Z/25
  RingPtr R25 = make_ring("Z/25");
  MultiplicativeCharacter s25 = quadratic_character(R25);
  for (Elem c : R25->units()) {
    long solutions = 0;
    for (Elem y : R25->units())
      if (R25->mul(y, y) == c) ++solutions;
    CHECK(Cyc(1) + s25(c) == Cyc(solutions));
  }

  CHECK_THROWS_AS(quadratic_character(make_ring("Z/8")), std::domain_error);
  CHECK_THROWS_AS(quadratic_character(make_ring("Z/12")), std::domain_error);
}

TEST_CASE("unit solution counts") {
  RingPtr R9 = make_ring("Z/9");
  MultiplicativeCharacter sigma = quadratic_character(R9);
  CHECK(count_unit_solutions(R9, 0, 8) == 2);
  CHECK(Cyc(1) + sigma(R9->neg(8)) == Cyc(2));
  CHECK(count_unit_solutions(R9, 0, 1) == 0);
  CHECK(Cyc(1) + sigma(R9->neg(1)) == Cyc(0));

  // discriminant rule wherever the discriminant is a unit
  for (const char* spec : {"Z/9", "Z/25", "GF(9)"}) {
    RingPtr R = make_ring(spec);
    MultiplicativeCharacter s = quadratic_character(R);
    for (Elem b = 0; b < R->size(); ++b)
      for (Elem c : R->units()) {
        Elem delta = R->sub(R->mul(b, b), R->mul(R->pow(2, 2), c));
        if (!R->is_unit(delta)) continue;
        CHECK(Cyc(count_unit_solutions(R, b, c)) == Cyc(1) + s(delta));
      }
  }

  // applicability edge: GF(3), b=1, c=1 has zero discriminant; the brute count
  // is still returned
  CHECK(count_unit_solutions(make_ring("GF(3)"), 1, 1) == 1);
  CHECK_THROWS_AS(count_unit_solutions(R9, 0, 3), std::domain_error);
}

TEST_CASE("lift and push of additive characters") {
  RingPtr R8 = make_ring("Z/8");
  auto psi = primitive_additive_character(R8);
  AdditiveCharacter scaled = scale(*psi, 4);  // conductor (2)
  Ideal I = conductor(scaled);
  Quotient q = quotient_ring(R8, I);
  CHECK(q.ring->size() == 2);
  AdditiveCharacter pushed = push_character(q, scaled);
  CHECK(is_primitive(pushed));
  AdditiveCharacter back = lift_character(q, pushed);
  CHECK(back == scaled);

  // lift of the trivial character is trivial
  CHECK(lift_character(q, AdditiveCharacter::trivial(q.ring)) ==
        AdditiveCharacter::trivial(R8));

  // push requires triviality on the ideal
  CHECK_THROWS_AS(push_character(q, *psi), std::domain_error);

  // characters of R trivial on I correspond to characters of R/I
  for (const auto& chi : additive_characters(R8)) {
    bool trivial_on = true;
    for (Elem i : I.elements)
      if (chi.exponent_at(i) != 0) trivial_on = false;
    if (!trivial_on) continue;
    CHECK(lift_character(q, push_character(q, chi)) == chi);
  }
}

TEST_CASE("sigma lifts from the residue field") {
  RingPtr R9 = make_ring("Z/9");
  Quotient q = quotient_ring(R9, *R9->local_structure().maximal_ideal);
  MultiplicativeCharacter sigma_res = quadratic_character(q.ring);
  MultiplicativeCharacter lifted = lift_character(q, sigma_res);
  CHECK(lifted == quadratic_character(R9));
  MultiplicativeCharacter pushed = push_character(q, quadratic_character(R9));
  CHECK(pushed == sigma_res);
}

TEST_CASE("characters evaluate off units only with an error") {
  RingPtr R9 = make_ring("Z/9");
  MultiplicativeCharacter chi = multiplicative_character_from_index(R9, 1);
  CHECK_THROWS_AS(chi(3), std::domain_error);
}

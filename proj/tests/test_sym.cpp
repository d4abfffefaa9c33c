#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "csf/sym.hpp"

using namespace csf;

namespace {

using Poly = std::map<std::vector<int>, Integer>;  // exponent vector -> coeff

// m_lambda as an explicit polynomial in nvars variables.
Poly monomial_poly(const Partition& lambda, int nvars) {
  Poly out;
  std::vector<int> v(static_cast<size_t>(nvars), 0);
  REQUIRE(lambda.length() <= nvars);
  for (int i = 0; i < lambda.length(); ++i) v[static_cast<size_t>(i)] = lambda.part(i);
  std::sort(v.begin(), v.end());
  do {
    out[v] = 1;
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Poly poly_mult(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  return out;
}

Poly element_poly(const SymElement& f, int nvars) {
  Poly out;
  for (const auto& [p, c] : f.terms()) {
    REQUIRE(c.get_den() == 1);
    for (const auto& [e, k] : monomial_poly(p, nvars)) out[e] += c.get_num() * k;
  }
  return out;
}

SymElement mono(int degree, std::vector<std::pair<std::vector<int>, Rational>> terms) {
  SymElement f(degree, SymBasis::Monomial);
  for (auto& [p, c] : terms) f.add_term(Partition(p), c);
  return f;
}

}  // namespace

TEST_CASE("generators in monomials") {
  CHECK(generator_in_monomials(SymBasis::E, 2) == mono(2, {{{1, 1}, 1}}));
  CHECK(generator_in_monomials(SymBasis::P, 2) == mono(2, {{{2}, 1}}));
  CHECK(generator_in_monomials(SymBasis::H, 2) == mono(2, {{{2}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("monomial multiplication anchors") {
  const SymElement e1 = generator_in_monomials(SymBasis::E, 1);
  CHECK(multiply(e1, e1) == mono(2, {{{1, 1}, 2}, {{2}, 1}}));
  const SymElement f = mono(3, {{{2, 1}, 5}, {{1, 1, 1}, Rational(1, 2)}});
  CHECK(multiply(f, SymElement::one()) == f);
  // p_1 p_1 - p_2 = 2 m_{11}, i.e. X_{P_2} = 2 e_2
  SymElement p1 = generator_in_monomials(SymBasis::P, 1);
  SymElement x = multiply(p1, p1) - generator_in_monomials(SymBasis::P, 2);
  CHECK(x == mono(2, {{{1, 1}, 2}}));
}

TEST_CASE("monomial multiplication against the polynomial oracle") {
  for (int da = 1; da <= 4; ++da)
    for (int db = da; db <= 4; ++db) {
      const int nvars = da + db;
      for (const auto& a : partitions_of(da))
        for (const auto& b : partitions_of(db)) {
          SymElement fa(da, SymBasis::Monomial), fb(db, SymBasis::Monomial);
          fa.add_term(a, 1);
          fb.add_term(b, 1);
          const SymElement prod = multiply(fa, fb);
          CHECK(multiply(fb, fa) == prod);  // commutative
          CHECK(element_poly(prod, nvars) ==
                poly_mult(monomial_poly(a, nvars), monomial_poly(b, nvars)));
        }
    }
}

TEST_CASE("schur_in_monomials anchors") {
  CHECK(schur_in_monomials(SkewShape(Partition({1, 1}), Partition())) == mono(2, {{{1, 1}, 1}}));
  CHECK(schur_in_monomials(SkewShape(Partition({2, 1}), Partition())) ==
        mono(3, {{{2, 1}, 1}, {{1, 1, 1}, 2}}));
  // s_{22/1} = s_{21}
  SymElement skew = schur_in_monomials(SkewShape(Partition({2, 2}), Partition({1})));
  SymElement sform = to_schur_coeffs(skew);
  SymElement expect(3, SymBasis::S);
  expect.add_term(Partition({2, 1}), 1);
  CHECK(sform == expect);
}

TEST_CASE("schur round trips") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      // SSYT-sum route equals the Kostka-row route
      CHECK(schur_in_monomials(SkewShape(l, Partition())) == s_in_monomials(l));
      SymElement s(n, SymBasis::S);
      s.add_term(l, 1);
      CHECK(to_schur_coeffs(to_monomials(s)) == s);
    }
  SymElement f = mono(4, {{{4}, 3}, {{2, 1, 1}, Rational(-7, 2)}, {{1, 1, 1, 1}, 1}});
  CHECK(to_monomials(to_schur_coeffs(f)) == f);
}

TEST_CASE("e round trips") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      SymElement e(n, SymBasis::E);
      e.add_term(l, 1);
      CHECK(to_e_coeffs(to_monomials(e)) == e);
    }
  SymElement f = mono(5, {{{5}, 1}, {{3, 2}, Rational(2, 3)}, {{2, 2, 1}, -4}});
  CHECK(to_monomials(to_e_coeffs(f)) == f);
}

TEST_CASE("h and p expansions multiply consistently") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n)) {
      SymElement prod = SymElement::one();
      for (int p : l.parts()) prod = multiply(prod, generator_in_monomials(SymBasis::H, p));
      CHECK(prod == h_in_monomials(l));
      SymElement prodp = SymElement::one();
      for (int p : l.parts()) prodp = multiply(prodp, generator_in_monomials(SymBasis::P, p));
      CHECK(prodp == p_in_monomials(l));
    }
}

TEST_CASE("e_to_schur (Prop 2.1) against the two-route expansion") {
  CHECK(e_to_schur(Partition({1})).coeff(Partition({1})) == 1);
  SymElement e2 = e_to_schur(Partition({2}));
  CHECK(e2.terms().size() == 1);
  CHECK(e2.coeff(Partition({1, 1})) == 1);
  SymElement e21 = e_to_schur(Partition({2, 1}));
  CHECK(e21.coeff(Partition({1, 1, 1})) == 1);
  CHECK(e21.coeff(Partition({2, 1})) == 1);
  CHECK(e21.terms().size() == 2);
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      const SymElement via_kostka = e_to_schur(l);
      const SymElement via_pivot = to_schur_coeffs(e_in_monomials(l));
      CHECK(via_kostka == via_pivot);
      for (const auto& [p, c] : via_kostka.terms()) CHECK(c > 0);
    }
}

TEST_CASE("ribbon schur coefficients") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(ribbon_schur_coefficient(Composition(std::vector<int>(static_cast<size_t>(n), 1)),
                                   Partition(std::vector<int>(static_cast<size_t>(n), 1))) == 1);
  }
  CHECK(ribbon_schur_coefficient(Composition({1, 2}), Partition({2, 1})) == 1);
  CHECK(ribbon_schur_coefficient(Composition({2, 1}), Partition({2, 1})) == 1);
  CHECK_THROWS_AS(ribbon_schur_coefficient(Composition({2}), Partition({1})), UsageError);
}

TEST_CASE("LR consistency: yamanouchi counts match the SSYT route") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& I : enumerate_compositions(n, CompositionFamily::All)) {
      const SymElement via_ssyt = to_schur_coeffs(schur_in_monomials(SkewShape::ribbon(I)));
      for (const auto& nu : partitions_of(n))
        CHECK(via_ssyt.coeff(nu) == Rational(ribbon_schur_coefficient(I, nu)));
      const auto& dp = ribbon_schur_expansion(I);
      SymElement via_dp(n, SymBasis::S);
      for (const auto& [p, c] : dp) via_dp.add_term(p, Rational(c));
      CHECK(via_dp == via_ssyt);
    }
}

TEST_CASE("pieri") {
  SymElement s1(1, SymBasis::S);
  s1.add_term(Partition({1}), 1);
  SymElement out = pieri_h(s1, 2);
  CHECK(out.coeff(Partition({3})) == 1);
  CHECK(out.coeff(Partition({2, 1})) == 1);
  CHECK(out.terms().size() == 2);
}

TEST_CASE("positivity report") {
  SymElement x2 = mono(2, {{{1, 1}, 2}});  // 2 e_2
  auto r = positivity_report(x2);
  CHECK(r.e_positive);
  CHECK(r.schur_positive);
  CHECK(std::string(r.positivity_class()) == "e-positive");

  SymElement s(4, SymBasis::S);
  s.add_term(Partition({3, 1}), 1);
  s.add_term(Partition({2, 2}), -1);
  auto r2 = positivity_report(to_monomials(s));
  CHECK_FALSE(r2.schur_positive);
  REQUIRE(r2.schur_witness.has_value());
  CHECK(r2.schur_witness->first == Partition({2, 2}));
  CHECK(r2.schur_witness->second == -1);
}

TEST_CASE("sym json round trip") {
  SymElement f = mono(4, {{{3, 1}, 5}, {{2, 2}, Rational(-1, 2)}});
  auto j = f.to_json();
  CHECK(j["basis"] == "m");
  CHECK(j["degree"] == 4);
  CHECK(j["terms"][0]["index"] == nlohmann::json::array({3, 1}));  // lex-descending
  CHECK(SymElement::from_json(j) == f);
  const std::string dumped = j.dump();
  CHECK(nlohmann::json::parse(dumped).dump() == dumped);
}

TEST_CASE("pretty printing") {
  SymElement f(4, SymBasis::S);
  f.add_term(Partition({3, 1}), 1);
  f.add_term(Partition({2, 2}), -1);
  f.add_term(Partition({2, 1, 1}), 5);
  f.add_term(Partition({1, 1, 1, 1}), 8);
  CHECK(f.str() == "s[3,1] - s[2,2] + 5*s[2,1,1] + 8*s[1,1,1,1]");
}

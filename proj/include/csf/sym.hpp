#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "csf/composition.hpp"
#include "csf/shape.hpp"

namespace csf {

enum class SymBasis { Monomial, E, H, P, S };

const char* basis_name(SymBasis b);          // "m", "e", "h", "p", "s"
SymBasis parse_sym_basis(const std::string& s);

/// Homogeneous symmetric function: sparse map from partitions of `degree` to
/// exact rationals, tagged with the basis the keys refer to.
class SymElement {
 public:
  SymElement() = default;
  SymElement(int degree, SymBasis basis) : degree_(degree), basis_(basis) {}

  static SymElement one() {  // the scalar 1 (degree 0, empty partition)
    SymElement f(0, SymBasis::Monomial);
    f.add_term(Partition(), 1);
    return f;
  }

  int degree() const { return degree_; }
  SymBasis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Partition, Rational>& terms() const { return coeffs_; }

  Rational coeff(const Partition& p) const;
  void add_term(const Partition& p, const Rational& c);

  SymElement& operator+=(const SymElement& other);
  SymElement& operator-=(const SymElement& other);
  SymElement& operator*=(const Rational& scalar);

  bool operator==(const SymElement&) const = default;

  nlohmann::json to_json() const;
  static SymElement from_json(const nlohmann::json& j);
  std::string str() const;  // "s[3,1] - s[2,2] + 5*s[2,1,1]"

 private:
  int degree_ = 0;
  SymBasis basis_ = SymBasis::Monomial;
  std::map<Partition, Rational> coeffs_;
};

SymElement operator+(SymElement a, const SymElement& b);
SymElement operator-(SymElement a, const SymElement& b);
SymElement operator*(const Rational& c, SymElement a);

/// Product of monomial-basis elements; rejects other bases.
SymElement multiply(const SymElement& f, const SymElement& g);
inline SymElement operator*(const SymElement& f, const SymElement& g) {
  return multiply(f, g);
}

/// e_k, h_k or p_k expanded in the monomial basis.
SymElement generator_in_monomials(SymBasis kind, int k);

/// e_lambda / h_lambda / p_lambda in the monomial basis (cached).
SymElement e_in_monomials(const Partition& lambda);
SymElement h_in_monomials(const Partition& lambda);
SymElement p_in_monomials(const Partition& lambda);
SymElement s_in_monomials(const Partition& lambda);  // Kostka row

/// Sum over semistandard tableaux (the defining expansion).
SymElement schur_in_monomials(const SkewShape& shape);

/// Monomial basis -> named basis, exact triangular back-substitution.
SymElement to_schur_coeffs(const SymElement& f);
SymElement to_e_coeffs(const SymElement& f);

/// Any-basis -> monomial pivot.
SymElement to_monomials(const SymElement& f);

/// Prop 2.1: e_lambda = sum_mu K_{mu' lambda} s_mu.
SymElement e_to_schur(const Partition& lambda);

/// Number of Yamanouchi words of shape sh(I) and content nu (ribbon
/// Littlewood-Richardson coefficient), by direct enumeration.
Integer ribbon_schur_coefficient(const Composition& I, const Partition& nu);

/// Schur expansion of the ribbon Schur function s_{sh(I)} via the product
/// recurrence s_{sh(I <| k)} = s_{sh(I)} h_k - s_{sh(I |> k)}; memoized.
const std::map<Partition, Integer>& ribbon_schur_expansion(const Composition& I);

/// Schur-basis product with h_k (adds horizontal strips).
SymElement pieri_h(const SymElement& schur, int k);

struct PositivityReport {
  bool e_positive = false;
  bool schur_positive = false;
  // Lex-minimal partition with a negative coefficient, when not positive.
  std::optional<std::pair<Partition, Rational>> e_witness, schur_witness;
  SymElement e_form, schur_form;

  const char* positivity_class() const {
    if (e_positive) return "e-positive";
    if (schur_positive) return "schur-positive-not-e-positive";
    return "not-schur-positive";
  }
};

PositivityReport positivity_report(const SymElement& f);

}  // namespace csf

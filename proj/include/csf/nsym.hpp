#pragma once

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "csf/sym.hpp"

namespace csf {

enum class NSymBasis { Lambda, S, Psi, R };

const char* nsym_basis_name(NSymBasis b);  // "Lambda", "S", "Psi", "R"
NSymBasis parse_nsym_basis(const std::string& s);

/// Homogeneous noncommutative symmetric function: sparse map from
/// compositions of `weight` to exact rationals in one of the four bases.
class NSymElement {
 public:
  NSymElement() = default;
  NSymElement(int weight, NSymBasis basis) : weight_(weight), basis_(basis) {}

  static NSymElement unit(NSymBasis basis) {  // weight 0, empty composition
    NSymElement f(0, basis);
    f.add_term(Composition(), 1);
    return f;
  }

  int weight() const { return weight_; }
  NSymBasis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Composition, Rational>& terms() const { return coeffs_; }

  Rational coeff(const Composition& I) const;
  void add_term(const Composition& I, const Rational& c);

  NSymElement& operator+=(const NSymElement& other);
  NSymElement& operator-=(const NSymElement& other);
  NSymElement& operator*=(const Rational& scalar);

  bool operator==(const NSymElement&) const = default;

  nlohmann::json to_json() const;
  static NSymElement from_json(const nlohmann::json& j);
  std::string str() const;

 private:
  int weight_ = 0;
  NSymBasis basis_ = NSymBasis::R;
  std::map<Composition, Rational> coeffs_;
};

NSymElement operator+(NSymElement a, const NSymElement& b);
NSymElement operator-(NSymElement a, const NSymElement& b);
NSymElement operator*(const Rational& c, NSymElement a);

/// Same-basis product: free concatenation for Lambda/S/Psi, the two-term
/// rule R_I R_J = R_{I<|J} + R_{I|>J} for ribbons.
NSymElement multiply(const NSymElement& f, const NSymElement& g);
inline NSymElement operator*(const NSymElement& f, const NSymElement& g) {
  return multiply(f, g);
}

/// Lambda^I = sum over refinements J of conj(reverse(I)) of R_J.
NSymElement lambda_to_ribbon(const NSymElement& f);

/// Psi^I = sum_{J >= I} lp(rev(J), rev(I)) epsilon^J Lambda^J.
/// (The source display carries a spurious epsilon^I; see tests anchoring
/// rho(Psi^I) = p_{rho(I)}.)
NSymElement psi_to_lambda(const NSymElement& f);

/// Psi^I = epsilon^I sum over hook decompositions relative to I of the
/// product of the hooks' signs times R of the composed ribbon.
NSymElement psi_to_ribbon(const NSymElement& f);

/// S^I = sum over coarsenings J of I of R_J, and its inverse
/// R_I = sum over coarsenings J of epsilon^I epsilon^J S^J.
NSymElement s_to_ribbon(const NSymElement& f);
NSymElement ribbon_to_s(const NSymElement& f);

/// S_n as a polynomial in the Lambda generators, from the recurrence
/// sum_{k=0..n} (-1)^k Lambda_k S_{n-k} = 0.
NSymElement s_from_lambda(int n);

/// The projection rho to Sym, landing in the monomial basis.
SymElement project_rho(const NSymElement& f);

/// rho of an R-basis element straight into the Schur basis (via the ribbon
/// Schur expansion); cheaper than project_rho at large weight.
SymElement project_rho_schur(const NSymElement& f);

}  // namespace csf

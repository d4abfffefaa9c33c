#include "csf/nsym.hpp"

#include <nlohmann/json.hpp>

namespace csf {

const char* nsym_basis_name(NSymBasis b) {
  switch (b) {
    case NSymBasis::Lambda: return "Lambda";
    case NSymBasis::S: return "S";
    case NSymBasis::Psi: return "Psi";
    case NSymBasis::R: return "R";
  }
  return "?";
}

NSymBasis parse_nsym_basis(const std::string& s) {
  if (s == "Lambda" || s == "lambda" || s == "L") return NSymBasis::Lambda;
  if (s == "S" || s == "s" || s == "complete") return NSymBasis::S;
  if (s == "Psi" || s == "psi") return NSymBasis::Psi;
  if (s == "R" || s == "r" || s == "ribbon") return NSymBasis::R;
  throw UsageError("unknown NSym basis '" + s + "'");
}

Rational NSymElement::coeff(const Composition& I) const {
  auto it = coeffs_.find(I);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void NSymElement::add_term(const Composition& I, const Rational& c) {
  if (c == 0) return;
  if (I.modulus() != weight_)
    throw UsageError("term of weight " + std::to_string(I.modulus()) +
                     " in element of weight " + std::to_string(weight_));
  auto [it, fresh] = coeffs_.emplace(I, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

NSymElement& NSymElement::operator+=(const NSymElement& other) {
  if (other.is_zero()) return *this;
  if (basis_ != other.basis_ || weight_ != other.weight_)
    throw UsageError("adding incompatible NSym elements");
  for (const auto& [I, c] : other.coeffs_) add_term(I, c);
  return *this;
}

NSymElement& NSymElement::operator-=(const NSymElement& other) {
  if (other.is_zero()) return *this;
  if (basis_ != other.basis_ || weight_ != other.weight_)
    throw UsageError("subtracting incompatible NSym elements");
  for (const auto& [I, c] : other.coeffs_) add_term(I, -c);
  return *this;
}

NSymElement& NSymElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [I, c] : coeffs_) c *= scalar;
  return *this;
}

NSymElement operator+(NSymElement a, const NSymElement& b) { return a += b; }
NSymElement operator-(NSymElement a, const NSymElement& b) { return a -= b; }
NSymElement operator*(const Rational& c, NSymElement a) { return a *= c; }

nlohmann::json NSymElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    nlohmann::json t;
    t["index"] = it->first.parts();
    t["num"] = it->second.get_num().get_str();
    t["den"] = it->second.get_den().get_str();
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["weight"] = weight_;
  j["basis"] = nsym_basis_name(basis_);
  j["terms"] = std::move(terms);
  return j;
}

NSymElement NSymElement::from_json(const nlohmann::json& j) {
  NSymElement f(j.at("weight").get<int>(), parse_nsym_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    Composition I(t.at("index").get<std::vector<int>>());
    Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    f.add_term(I, c);
  }
  return f;
}

std::string NSymElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const Rational& c = it->second;
    const bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (a != 1) s += rational_str(a) + "*";
    s += std::string(nsym_basis_name(basis_)) + it->first.str();
  }
  return s;
}

NSymElement multiply(const NSymElement& f, const NSymElement& g) {
  if (f.basis() != g.basis()) throw UsageError("NSym multiply: basis mismatch");
  NSymElement out(f.weight() + g.weight(), f.basis());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      const Rational c = ca * cb;
      if (f.basis() == NSymBasis::R) {
        if (a.empty()) {
          out.add_term(b, c);
        } else if (b.empty()) {
          out.add_term(a, c);
        } else {
          out.add_term(a.concat(b), c);
          out.add_term(a.near_concat(b), c);
        }
      } else {
        out.add_term(a.concat(b), c);
      }
    }
  return out;
}

NSymElement lambda_to_ribbon(const NSymElement& f) {
  if (f.basis() != NSymBasis::Lambda) throw UsageError("lambda_to_ribbon: Lambda input required");
  NSymElement out(f.weight(), NSymBasis::R);
  for (const auto& [I, c] : f.terms())
    for (const auto& J : refinements_of(I.reversed().conjugate())) out.add_term(J, c);
  return out;
}

NSymElement psi_to_lambda(const NSymElement& f) {
  if (f.basis() != NSymBasis::Psi) throw UsageError("psi_to_lambda: Psi input required");
  NSymElement out(f.weight(), NSymBasis::Lambda);
  for (const auto& [I, c] : f.terms()) {
    const Composition rev = I.reversed();
    for (const auto& J : refinements_of(I)) {
      const Integer w = lp(J.reversed(), rev);
      out.add_term(J, c * Rational(J.sign() * w));
    }
  }
  return out;
}

NSymElement psi_to_ribbon(const NSymElement& f) {
  if (f.basis() != NSymBasis::Psi) throw UsageError("psi_to_ribbon: Psi input required");
  NSymElement out(f.weight(), NSymBasis::R);
  for (const auto& [I, c] : f.terms()) {
    const int global = I.sign();
    for (const auto& d : hook_decompositions_rel(I))
      out.add_term(d.compose(), c * Rational(global * d.sign()));
  }
  return out;
}

NSymElement s_to_ribbon(const NSymElement& f) {
  if (f.basis() != NSymBasis::S) throw UsageError("s_to_ribbon: S input required");
  NSymElement out(f.weight(), NSymBasis::R);
  for (const auto& [I, c] : f.terms())
    for (const auto& J : coarsenings_of(I)) out.add_term(J, c);
  return out;
}

NSymElement ribbon_to_s(const NSymElement& f) {
  if (f.basis() != NSymBasis::R) throw UsageError("ribbon_to_s: R input required");
  NSymElement out(f.weight(), NSymBasis::S);
  for (const auto& [I, c] : f.terms()) {
    const int si = I.sign();
    for (const auto& J : coarsenings_of(I)) out.add_term(J, c * Rational(si * J.sign()));
  }
  return out;
}

NSymElement s_from_lambda(int n) {
  if (n < 0) throw UsageError("s_from_lambda: n must be >= 0");
  std::vector<NSymElement> s;  // S_0..S_n in the Lambda basis
  s.push_back(NSymElement::unit(NSymBasis::Lambda));
  for (int m = 1; m <= n; ++m) {
    NSymElement sm(m, NSymBasis::Lambda);
    for (int k = 1; k <= m; ++k) {
      NSymElement lk(k, NSymBasis::Lambda);
      lk.add_term(Composition(std::vector<int>{k}), 1);
      NSymElement term = multiply(lk, s[static_cast<size_t>(m - k)]);
      term *= Rational(k % 2 == 1 ? 1 : -1);
      sm += term;
    }
    s.push_back(std::move(sm));
  }
  return s.back();
}

SymElement project_rho(const NSymElement& f) {
  SymElement out(f.weight(), SymBasis::Monomial);
  switch (f.basis()) {
    case NSymBasis::Lambda:
      for (const auto& [I, c] : f.terms()) out += c * e_in_monomials(Partition::of(I));
      break;
    case NSymBasis::S:
      for (const auto& [I, c] : f.terms()) out += c * h_in_monomials(Partition::of(I));
      break;
    case NSymBasis::Psi:
      for (const auto& [I, c] : f.terms()) out += c * p_in_monomials(Partition::of(I));
      break;
    case NSymBasis::R:
      return to_monomials(project_rho_schur(f));
  }
  return out;
}

SymElement project_rho_schur(const NSymElement& f) {
  if (f.basis() != NSymBasis::R) throw UsageError("project_rho_schur: R input required");
  SymElement out(f.weight(), SymBasis::S);
  for (const auto& [I, c] : f.terms())
    for (const auto& [p, k] : ribbon_schur_expansion(I)) out.add_term(p, c * Rational(k));
  return out;
}

}  // namespace csf

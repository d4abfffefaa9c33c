#include "csf/sym.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include <nlohmann/json.hpp>

namespace csf {

const char* basis_name(SymBasis b) {
  switch (b) {
    case SymBasis::Monomial: return "m";
    case SymBasis::E: return "e";
    case SymBasis::H: return "h";
    case SymBasis::P: return "p";
    case SymBasis::S: return "s";
  }
  return "?";
}

SymBasis parse_sym_basis(const std::string& s) {
  if (s == "m" || s == "monomial") return SymBasis::Monomial;
  if (s == "e") return SymBasis::E;
  if (s == "h") return SymBasis::H;
  if (s == "p") return SymBasis::P;
  if (s == "s" || s == "schur") return SymBasis::S;
  throw UsageError("unknown basis '" + s + "'");
}

Rational SymElement::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymElement::add_term(const Partition& p, const Rational& c) {
  if (c == 0) return;
  if (p.modulus() != degree_)
    throw UsageError("term of degree " + std::to_string(p.modulus()) +
                     " in element of degree " + std::to_string(degree_));
  auto [it, fresh] = coeffs_.emplace(p, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SymElement& SymElement::operator+=(const SymElement& other) {
  if (other.is_zero()) return *this;
  if (basis_ != other.basis_ || degree_ != other.degree_)
    throw UsageError("adding incompatible elements");
  for (const auto& [p, c] : other.coeffs_) add_term(p, c);
  return *this;
}

SymElement& SymElement::operator-=(const SymElement& other) {
  if (other.is_zero()) return *this;
  if (basis_ != other.basis_ || degree_ != other.degree_)
    throw UsageError("subtracting incompatible elements");
  for (const auto& [p, c] : other.coeffs_) add_term(p, -c);
  return *this;
}

SymElement& SymElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, c] : coeffs_) c *= scalar;
  return *this;
}

SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
SymElement operator*(const Rational& c, SymElement a) { return a *= c; }

nlohmann::json SymElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  // lex-descending on the index
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    nlohmann::json t;
    t["index"] = it->first.parts();
    t["num"] = it->second.get_num().get_str();
    t["den"] = it->second.get_den().get_str();
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["degree"] = degree_;
  j["basis"] = basis_name(basis_);
  j["terms"] = std::move(terms);
  return j;
}

SymElement SymElement::from_json(const nlohmann::json& j) {
  SymElement f(j.at("degree").get<int>(), parse_sym_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    Partition p(t.at("index").get<std::vector<int>>());
    Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    f.add_term(p, c);
  }
  return f;
}

std::string SymElement::str() const {
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
    s += basis_name(basis_) + it->first.str();
  }
  return s;
}

// --- monomial multiplication ------------------------------------------------

namespace {

// Number of distinct arrangements of `v` (including its zero entries).
Integer arrangements(const std::vector<int>& v) {
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v.size()));
  for (const auto& [val, m] : mult) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    r /= f;
  }
  return r;
}

// m_a * m_b for single partitions, as partition -> integer count.
std::map<Partition, Integer> mono_pair_product(const Partition& a, const Partition& b) {
  const Partition& big = a.length() >= b.length() ? a : b;
  const Partition& small = a.length() >= b.length() ? b : a;
  std::map<Partition, Integer> out;
  if (small.length() == 0) {
    out[big] = 1;
    return out;
  }
  if (small.length() == 1) {
    // Add k to one slot of `big` (or a fresh slot); the count of the target
    // value in the result is the multiplicity.
    const int k = small.part(0);
    std::vector<int> values{0};
    for (int v : big.parts())
      if (values.back() != v) values.push_back(v);
    for (int v : values) {
      std::vector<int> parts = big.parts();
      if (v == 0) {
        parts.push_back(k);
      } else {
        auto it = std::find(parts.begin(), parts.end(), v);
        *it += k;
      }
      Partition nu = Partition::from_multiset(std::move(parts));
      out[nu] = nu.count_of(v + k);
    }
    return out;
  }
  const size_t L = static_cast<size_t>(big.length() + small.length());
  std::vector<int> lam(L, 0), mu(L, 0);
  for (int i = 0; i < big.length(); ++i) lam[static_cast<size_t>(i)] = big.part(i);
  for (int i = 0; i < small.length(); ++i) mu[static_cast<size_t>(i)] = small.part(i);
  std::sort(mu.begin(), mu.end());
  std::map<Partition, Integer> cnt;
  std::vector<int> sum(L);
  do {
    for (size_t i = 0; i < L; ++i) sum[i] = lam[i] + mu[i];
    std::vector<int> key;
    for (int x : sum)
      if (x > 0) key.push_back(x);
    std::sort(key.begin(), key.end(), std::greater<>());
    cnt[Partition(std::move(key))] += 1;
  } while (std::next_permutation(mu.begin(), mu.end()));
  const Integer r_lam = arrangements(lam);
  for (auto& [nu, c] : cnt) {
    std::vector<int> nu_pad = nu.parts();
    nu_pad.resize(L, 0);
    Rational exact = Rational(r_lam * c) / Rational(arrangements(nu_pad));
    if (exact.get_den() != 1) throw CheckFailure("monomial product: non-integer multiplicity");
    out[nu] = exact.get_num();
  }
  return out;
}

std::recursive_mutex cache_mu;
std::map<Partition, SymElement> p_to_m_cache, e_to_m_cache, s_to_m_cache, h_to_m_cache;
std::map<Composition, std::map<Partition, Integer>> ribbon_cache;

}  // namespace

SymElement multiply(const SymElement& f, const SymElement& g) {
  if (f.basis() != SymBasis::Monomial || g.basis() != SymBasis::Monomial)
    throw UsageError("multiply: both factors must be in the monomial basis");
  SymElement out(f.degree() + g.degree(), SymBasis::Monomial);
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      const Rational cab = ca * cb;
      for (const auto& [nu, n] : mono_pair_product(a, b)) out.add_term(nu, cab * Rational(n));
    }
  return out;
}

SymElement generator_in_monomials(SymBasis kind, int k) {
  if (k < 1) throw UsageError("generator index must be >= 1");
  SymElement out(k, SymBasis::Monomial);
  switch (kind) {
    case SymBasis::E:
      out.add_term(Partition(std::vector<int>(static_cast<size_t>(k), 1)), 1);
      break;
    case SymBasis::P:
      out.add_term(Partition(std::vector<int>{k}), 1);
      break;
    case SymBasis::H:
      for (const auto& p : partitions_of(k)) out.add_term(p, 1);
      break;
    default:
      throw UsageError("generator_in_monomials: kind must be e, h or p");
  }
  return out;
}

namespace {

// Prefix-shared product of generator expansions, memoized on the partition.
SymElement generators_product(const Partition& lambda, SymBasis kind,
                              std::map<Partition, SymElement>& cache) {
  if (lambda.empty()) return SymElement::one();
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  std::vector<int> head = lambda.parts();
  const int k = head.back();
  head.pop_back();
  SymElement result =
      multiply(generators_product(Partition(head), kind, cache), generator_in_monomials(kind, k));
  cache.emplace(lambda, result);
  return result;
}

}  // namespace

SymElement p_in_monomials(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  return generators_product(lambda, SymBasis::P, p_to_m_cache);
}

SymElement e_in_monomials(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  return generators_product(lambda, SymBasis::E, e_to_m_cache);
}

SymElement s_in_monomials(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  auto it = s_to_m_cache.find(lambda);
  if (it != s_to_m_cache.end()) return it->second;
  const int n = lambda.modulus();
  const KostkaTable& kt = KostkaTable::of(n);
  SymElement out(n, SymBasis::Monomial);
  const int li = kt.index(lambda);
  for (size_t c = 0; c < kt.parts().size(); ++c) {
    const Integer& k = kt.value(li, static_cast<int>(c));
    if (k != 0) out.add_term(kt.parts()[c], Rational(k));
  }
  s_to_m_cache.emplace(lambda, out);
  return out;
}

SymElement h_in_monomials(const Partition& lambda) {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  auto it = h_to_m_cache.find(lambda);
  if (it != h_to_m_cache.end()) return it->second;
  // h_mu = sum_l K_{l,mu} s_l, then s_l -> monomials; both from the table.
  const int n = lambda.modulus();
  const KostkaTable& kt = KostkaTable::of(n);
  SymElement out(n, SymBasis::Monomial);
  const int mu = kt.index(lambda);
  for (size_t l = 0; l < kt.parts().size(); ++l) {
    const Integer& k = kt.value(static_cast<int>(l), mu);
    if (k == 0) continue;
    for (size_t c = 0; c < kt.parts().size(); ++c) {
      const Integer& k2 = kt.value(static_cast<int>(l), static_cast<int>(c));
      if (k2 != 0) out.add_term(kt.parts()[c], Rational(k * k2));
    }
  }
  h_to_m_cache.emplace(lambda, out);
  return out;
}

SymElement schur_in_monomials(const SkewShape& shape) {
  const int n = shape.size();
  SymElement out(n, SymBasis::Monomial);
  if (n == 0) return SymElement::one();
  for (const auto& t : enumerate_ssyt(shape, n)) {
    std::vector<int> c = t.content();
    bool canonical = true;
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i + 1] > c[i]) {
        canonical = false;
        break;
      }
    if (!canonical || (!c.empty() && c.back() == 0)) continue;
    out.add_term(Partition(c), 1);
  }
  return out;
}

SymElement to_monomials(const SymElement& f) {
  switch (f.basis()) {
    case SymBasis::Monomial: return f;
    case SymBasis::E:
    case SymBasis::H:
    case SymBasis::P:
    case SymBasis::S: {
      SymElement out(f.degree(), SymBasis::Monomial);
      for (const auto& [p, c] : f.terms()) {
        SymElement base = f.basis() == SymBasis::E   ? e_in_monomials(p)
                          : f.basis() == SymBasis::H ? h_in_monomials(p)
                          : f.basis() == SymBasis::P ? p_in_monomials(p)
                                                     : s_in_monomials(p);
        base *= c;
        out += base;
      }
      return out;
    }
  }
  throw UsageError("to_monomials: bad basis");
}

SymElement to_schur_coeffs(const SymElement& f) {
  if (f.basis() != SymBasis::Monomial) throw UsageError("to_schur_coeffs: monomial input required");
  const int n = f.degree();
  SymElement rest = f;
  SymElement out(n, SymBasis::S);
  const KostkaTable& kt = KostkaTable::of(n);
  while (!rest.is_zero()) {
    // lex-max monomial key is dominance-maximal, so its coefficient is the
    // Schur coefficient of the same partition
    const auto& [pivot, c] = *rest.terms().rbegin();
    out.add_term(pivot, c);
    const int pi = kt.index(pivot);
    SymElement row(n, SymBasis::Monomial);
    for (size_t j = 0; j < kt.parts().size(); ++j) {
      const Integer& k = kt.value(pi, static_cast<int>(j));
      if (k != 0) row.add_term(kt.parts()[j], c * Rational(k));
    }
    rest -= row;
  }
  return out;
}

SymElement to_e_coeffs(const SymElement& f) {
  if (f.basis() != SymBasis::Monomial) throw UsageError("to_e_coeffs: monomial input required");
  const int n = f.degree();
  const SymElement schur = to_schur_coeffs(f);
  const KostkaTable& kt = KostkaTable::of(n);
  // Solve g_{nu'} = d_nu + sum_{la < nu} K_{nu,la} d_la ascending in lex
  // (which refines dominance), so earlier d's are already known.
  const auto& parts = kt.parts();
  std::vector<Rational> d(parts.size(), Rational(0));
  SymElement out(n, SymBasis::E);
  for (size_t i = parts.size(); i-- > 0;) {  // parts is lex-descending; go ascending
    const Partition& nu = parts[i];
    Rational g = schur.coeff(nu.conjugate());
    const int ni = kt.index(nu);
    for (size_t j = parts.size(); j-- > i + 1;) {
      if (d[j] == 0) continue;
      const Integer& k = kt.value(ni, static_cast<int>(j));
      if (k != 0) g -= Rational(k) * d[j];
    }
    d[i] = g;
    if (g != 0) out.add_term(nu, g);
  }
  return out;
}

SymElement e_to_schur(const Partition& lambda) {
  const int n = lambda.modulus();
  const KostkaTable& kt = KostkaTable::of(n);
  const int li = kt.index(lambda);
  SymElement out(n, SymBasis::S);
  for (const auto& mu : kt.parts()) {
    const Integer& k = kt.value(kt.index(mu.conjugate()), li);
    if (k != 0) out.add_term(mu, Rational(k));
  }
  return out;
}

SymElement pieri_h(const SymElement& schur, int k) {
  if (schur.basis() != SymBasis::S) throw UsageError("pieri_h: Schur input required");
  SymElement out(schur.degree() + k, SymBasis::S);
  for (const auto& [p, c] : schur.terms())
    for (const auto& q : add_horizontal_strips(p, k)) out.add_term(q, c);
  return out;
}

const std::map<Partition, Integer>& ribbon_schur_expansion(const Composition& I) {
  std::lock_guard<std::recursive_mutex> lock(cache_mu);
  auto it = ribbon_cache.find(I);
  if (it != ribbon_cache.end()) return it->second;
  std::map<Partition, Integer> result;
  if (I.empty()) {
    result[Partition()] = 1;
  } else if (I.length() == 1) {
    result[Partition(std::vector<int>{I.part(0)})] = 1;  // s_{(k)} = h_k
  } else {
    std::vector<int> head = I.parts();
    const int k = head.back();
    head.pop_back();
    const Composition J(head);
    const auto& base = ribbon_schur_expansion(J);
    for (const auto& [p, c] : base)
      for (const auto& q : add_horizontal_strips(p, k)) result[q] += c;
    std::vector<int> merged = head;
    merged.back() += k;
    for (const auto& [p, c] : ribbon_schur_expansion(Composition(merged))) {
      auto& slot = result[p];
      slot -= c;
      if (slot == 0) result.erase(p);
    }
  }
  return ribbon_cache.emplace(I, std::move(result)).first->second;
}

Integer ribbon_schur_coefficient(const Composition& I, const Partition& nu) {
  if (I.modulus() != nu.modulus())
    throw UsageError("ribbon_schur_coefficient: modulus mismatch");
  // Count Yamanouchi words with run type exactly I~ and content nu.
  const Composition target = I.conjugate();
  const int n = nu.modulus();
  Integer count = 0;
  std::vector<int> used(static_cast<size_t>(nu.length()), 0);
  std::function<void(int, int, int, int)> rec = [&](int pos, int last, int run, int runlen) {
    if (pos == n) {
      if (runlen == target.part(run)) ++count;
      return;
    }
    for (int c = 1; c <= nu.length(); ++c) {
      if (used[static_cast<size_t>(c - 1)] >= nu.part(c - 1)) continue;
      if (c > 1 && used[static_cast<size_t>(c - 1)] >= used[static_cast<size_t>(c - 2)]) continue;
      const bool extends = pos > 0 && c > last;
      int nrun = run, nlen = runlen;
      if (pos == 0) {
        nrun = 0;
        nlen = 1;
      } else if (extends) {
        nlen = runlen + 1;
        if (nlen > target.part(run)) continue;
      } else {
        if (runlen != target.part(run)) continue;
        if (run + 1 >= target.length()) continue;
        nrun = run + 1;
        nlen = 1;
      }
      ++used[static_cast<size_t>(c - 1)];
      rec(pos + 1, c, nrun, nlen);
      --used[static_cast<size_t>(c - 1)];
    }
  };
  if (n == 0) return 1;
  rec(0, 0, 0, 0);
  return count;
}

PositivityReport positivity_report(const SymElement& f) {
  const SymElement m = to_monomials(f);
  PositivityReport r;
  r.schur_form = to_schur_coeffs(m);
  r.e_form = to_e_coeffs(m);
  r.e_positive = true;
  r.schur_positive = true;
  for (const auto& [p, c] : r.schur_form.terms())
    if (c < 0) {
      r.schur_positive = false;
      if (!r.schur_witness || p < r.schur_witness->first) r.schur_witness = {p, c};
    }
  for (const auto& [p, c] : r.e_form.terms())
    if (c < 0) {
      r.e_positive = false;
      if (!r.e_witness || p < r.e_witness->first) r.e_witness = {p, c};
    }
  return r;
}

}  // namespace csf

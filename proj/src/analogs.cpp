#include "csf/analogs.hpp"

#include <algorithm>

#include "csf/graphs.hpp"

namespace csf {

NSymElement xtilde_path(int n, NSymBasis basis) {
  if (n < 1) throw UsageError("xtilde_path: n must be >= 1");
  NSymElement out(n, basis);
  switch (basis) {
    case NSymBasis::Psi:
      for (const auto& I : enumerate_compositions(n, CompositionFamily::All))
        out.add_term(I, Rational(I.sign()));
      break;
    case NSymBasis::Lambda:
      for (const auto& I : enumerate_compositions(n, CompositionFamily::All)) {
        Integer c = I.part(0);
        for (int i = 1; i < I.length() && c != 0; ++i) c *= I.part(i) - 1;
        if (c != 0) out.add_term(I, Rational(c));
      }
      break;
    case NSymBasis::R:
      for (const auto& I : enumerate_compositions(n, CompositionFamily::CLastOne))
        out.add_term(I, make_rational(m_power(I), 2));
      break;
    case NSymBasis::S:
      throw UsageError("xtilde_path: no S-basis form");
  }
  return out;
}

Integer hook_partition_count(const Composition& J) {
  const int n = J.modulus();
  for (int p : J.parts())
    if (p > 2) throw UsageError("hook_partition_count: J must lie in C_n");
  if (J.empty() || J.last() != 1) throw UsageError("hook_partition_count: J must lie in C_n");
  (void)n;
  // Row tails: last boxes of the length-2 rows, in path order.
  std::vector<int> tails;
  int offset = 0;
  for (int p : J.parts()) {
    offset += p;
    if (p >= 2) tails.push_back(offset - 1);
  }
  Integer count = 0;
  for (const auto& d : hook_decompositions_of(J)) {
    std::vector<int> starts;
    std::vector<int> lens;
    int pos = 0;
    for (const auto& h : d.hooks) {
      starts.push_back(pos);
      lens.push_back(h.modulus());
      pos += h.modulus();
    }
    bool ok = true;
    for (int t : tails) {
      bool found = false;
      for (size_t i = 0; i < starts.size(); ++i)
        if (starts[i] == t && lens[i] >= 2) {
          found = true;
          break;
        }
      if (!found) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::pair<NSymElement, NSymElement> ab_tilde(int n) {
  if (n < 1) throw UsageError("ab_tilde: n must be >= 1");
  NSymElement a(n, NSymBasis::Lambda);
  for (const auto& I : enumerate_compositions(n, CompositionFamily::All)) {
    Integer c = 1;
    for (int i = 0; i < I.length() && c != 0; ++i) c *= I.part(i) - 1;
    if (c != 0) a.add_term(I, Rational(c));
  }
  // [R_J] B~_n = f(t_1) prod_{i>=2} g(t_i) over the column lengths t of J,
  // with f(1)=0, f(2)=2, f(t)=3*2^{t-3}, g(t)=2^{t-2}. Equivalent to the
  // 1/2 m^I (prefix 12) + 3/8 m^I (prefix 11) split for n >= 3.
  NSymElement b(n, NSymBasis::R);
  for (const auto& J : enumerate_compositions(n, CompositionFamily::COneEnds)) {
    std::vector<int> cols = J.conjugate().reversed().parts();  // left to right
    Rational c;
    const int t1 = cols.front();
    if (t1 == 1)
      c = 0;
    else if (t1 == 2)
      c = 2;
    else
      c = Rational(3 * pow2(t1 - 3));
    for (size_t i = 1; i < cols.size() && c != 0; ++i) c *= Rational(pow2(cols[i] - 2));
    if (c != 0) b.add_term(J, c);
  }
  return {std::move(a), std::move(b)};
}

std::pair<NSymElement, NSymElement> de_tilde(int n, int k) {
  if (k < 1 || k > n - 1) throw UsageError("de_tilde: need 1 <= k <= n-1");
  NSymElement d = xtilde_path(n, NSymBasis::Lambda);
  d -= multiply(xtilde_path(n - k, NSymBasis::Lambda), ab_tilde(k).first);
  NSymElement e = xtilde_path(n, NSymBasis::R);
  e -= multiply(xtilde_path(n - k, NSymBasis::R), ab_tilde(k).second);
  return {std::move(d), std::move(e)};
}

Integer path_e_coefficient(const Partition& lambda, int n) {
  if (lambda.modulus() != n) throw UsageError("path_e_coefficient: modulus mismatch");
  // Sum over distinct rearrangements alpha of lambda.
  std::vector<int> alpha = lambda.parts();
  std::sort(alpha.begin(), alpha.end());
  Integer total = 0;
  do {
    Integer c = 1;
    for (size_t i = 0; i + 1 < alpha.size(); ++i) c *= alpha[i] - 1;
    c *= alpha.back();
    total += c;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return total;
}

std::pair<Integer, Integer> lemma33_sums(int n) {
  if (n < 2) throw UsageError("lemma33_sums: n must be >= 2");
  Integer first = 0, second = 0;
  for (const auto& c : enumerate_compositions(n, CompositionFamily::CPartsGe2)) {
    Integer p = 1;
    for (int i = 1; i < c.length(); ++i) p *= c.part(i) - 1;
    second += Integer(c.part(0)) * p;
    first += Integer(c.part(0) - 1) * p;
  }
  const Integer want_first = pow2(n - 2);
  const Integer want_second = n == 2 ? Integer(2) : Integer(3 * pow2(n - 3));
  if (first != want_first || second != want_second)
    throw CheckFailure("lemma33_sums: closed forms fail at n=" + std::to_string(n));
  return {first, second};
}

std::pair<SymElement, SymElement> ab_split(int n) {
  if (n < 1) throw UsageError("ab_split: n must be >= 1");
  const SymElement e_form = to_e_coeffs(path_csf(n));
  SymElement a(n - 1, SymBasis::E), b(n, SymBasis::E);
  for (const auto& [lambda, c] : e_form.terms()) {
    if (lambda.count_of(1) > 0) {
      std::vector<int> rest = lambda.parts();
      rest.erase(std::find(rest.begin(), rest.end(), 1));
      a.add_term(Partition(rest), c);
    } else {
      b.add_term(lambda, c);
    }
  }
  return {to_monomials(a), to_monomials(b)};
}

Cor36Report corollary36_checks(int n, int k) {
  if (k < 1 || k > n) throw UsageError("corollary36_checks: need 1 <= k <= n");
  Cor36Report r;
  SymElement diff = path_csf(n);
  if (k == n) {
    SymElement ek = e_in_monomials(Partition(std::vector<int>{k}));
    ek *= Rational(n);
    diff -= ek;
  } else {
    SymElement sub = multiply(e_in_monomials(Partition(std::vector<int>{k})), path_csf(n - k));
    sub *= Rational(k - 1);
    diff -= sub;
  }
  r.difference_e_positive = positivity_report(diff).e_positive;
  if (n == 2 * k) {
    SymElement sharp = path_csf(n);
    SymElement sub = multiply(e_in_monomials(Partition(std::vector<int>{k})), path_csf(k));
    sub *= Rational(k);
    sharp -= sub;
    r.sharpness_checked = true;
    r.sharpness_coeff = to_e_coeffs(sharp).coeff(Partition(std::vector<int>{k, k}));
  }
  return r;
}

}  // namespace csf

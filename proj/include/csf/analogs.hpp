#pragma once

#include <utility>

#include "csf/nsym.hpp"

namespace csf {

/// The noncommutative analog of X_{P_n} in the requested basis:
/// Psi: sum over I of epsilon^I Psi^I; Lambda: i_1(i_2-1)...(i_l-1) Lambda^I;
/// R: (1/2) sum over C_n of m^I R_I.
NSymElement xtilde_path(int n, NSymBasis basis);

/// |H'(J)|: hook decompositions of J in which every row tail starts a hook of
/// length >= 2; direct enumeration. J must lie in C_n.
Integer hook_partition_count(const Composition& J);

/// (A~_n in the Lambda basis, B~_n in the R basis).
std::pair<NSymElement, NSymElement> ab_tilde(int n);

/// (D~_{n,k} in Lambda, E~_{n,k} in R).
std::pair<NSymElement, NSymElement> de_tilde(int n, int k);

/// [e_lambda] X_{P_n} = sum over rearrangements alpha of lambda of
/// (alpha_1 - 1)...(alpha_{l-1} - 1) alpha_l.
Integer path_e_coefficient(const Partition& lambda, int n);

/// Brute-force sums over compositions of n with all parts >= 2:
/// (prod (c_i - 1), c_1 * prod_{i>=2} (c_i - 1)); checks the closed forms
/// 2^{n-2} and (2 if n = 2 else 3*2^{n-3}).
std::pair<Integer, Integer> lemma33_sums(int n);

struct Cor36Report {
  bool difference_e_positive = false;  // X_{P_n} - (k-1) e_k X_{P_{n-k}}
  bool sharpness_checked = false;      // only when n == 2k
  Rational sharpness_coeff;            // [e_{k,k}](X_{P_{2k}} - k e_k X_{P_k})
};

Cor36Report corollary36_checks(int n, int k);

/// Commutative ground truth for the A/B split: (A_{n-1}, B_n) in the
/// monomial basis, from the path oracle's e-expansion
/// (X_{P_n} = e_1 A_{n-1} + B_n with no part-1 e-index in B_n).
std::pair<SymElement, SymElement> ab_split(int n);

}  // namespace csf

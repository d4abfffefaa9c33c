#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csf/multiset.hpp"
#include "csf/sym.hpp"

namespace csf {

struct YamFilter {
  std::optional<Composition> runtype_prefix;  // alpha: tau_y starts with alpha
  Word word_prefix;                           // beta: y starts with beta
};

/// Y(kappa): Yamanouchi words of content kappa whose non-last runs all have
/// length >= 2, restricted by the filter; lexicographic order.
std::vector<Word> enumerate_yam(const Partition& kappa, const YamFilter& filter = {});

Rational weight_m(const Word& y);                // 2^{n+2-2 l(tau_y)}
Rational weight_m_shape_reading(const Word& y);  // 2^{m_1(sh(y))}

/// (Y(kappa) with filter, m/2) as a multiset.
WordMultiset multiset_M(const Partition& kappa, const YamFilter& filter = {});

/// [s_kappa] E_{n,k} from the proof's I_1..I_5 decomposition; needs n >= 2k,
/// k >= 2.
Rational schur_coeff_E(int n, int k, const Partition& kappa);

/// The printed statement's reading (fourth term summed over C'_{k+2} with
/// multiplicity); exposed for comparison against ground truth.
Rational schur_coeff_E_printed(int n, int k, const Partition& kappa);

struct Lemma42Result {
  MultiMap iota;
  WordMultiset source;  // M_j(kappa) scaled by 1/2
  WordMultiset target;  // M_{j-1}(kappa)
  WordMultiset image;
  bool well_defined = false;
  bool multi_injection = false;
};

/// Lemma 4.2's map: certifies ||M_{j-1}(kappa)|| >= ||M_j(kappa)||/2.
Lemma42Result iota_lemma42(int j, const Partition& kappa);

enum class Lemma45Bullet { B1, B2, B3 };

struct Lemma45Result {
  MultiMap iota;
  WordMultiset source, target, image;
  WordMultiset residual, expected_residual;
  bool well_defined = false;
  bool multi_injection = false;
  bool m_scaling_ok = false;  // m preserved (B1, B2); m quadrupled (B3)
  bool residual_ok = false;   // B1, B2: difference matches; B3: support bijection
};

/// z is the second run length for B2 and ignored otherwise.
Lemma45Result injections_lemma45(Lemma45Bullet bullet, int z, const Partition& kappa);

struct XYSplit {
  // x_lt / x_ge follow the appendix tabulation 3/2 M_23(kappa); the _def
  // variants apply the body's exclusion 3/2 (M_23 \ M(kappa;[2][3]3)),
  // a submultiset of the former.
  WordMultiset x_lt, x_ge;
  WordMultiset x_lt_def, x_ge_def;
  WordMultiset y_lt, y_ge;
};

/// X(kappa) in both readings (see XYSplit) and
/// Y(kappa) = 2 M_24 | M(kappa;[3][3]1) | M_22, split per letter t at the
/// marked positions (9,10), or the last two positions when |kappa| = 9.
std::map<int, XYSplit> build_xy(const Partition& kappa);

struct AppendixRecord {
  Partition mu;
  int t = 0;
  Rational x_lt, x_ge;          // exact norms
  Rational y_lt_min, y_ge_min;  // lower bounds
  std::vector<Word> x_lt_words, x_ge_words;  // complete supports
  std::vector<Word> y_lt_words, y_ge_words;  // witness subsets
};

std::vector<AppendixRecord> load_appendix_fixture(const std::string& path);

struct Prop10Entry {
  Partition mu;
  int t = 0;
  Rational x_lt, x_ge, y_lt, y_ge;
};

struct Prop10Report {
  bool pass = false;
  int nonempty_contents = 0;
  std::vector<Prop10Entry> entries;  // every (mu, t) with X nonempty
  std::vector<std::string> failures;
};

/// Prop 4.4 over all partitions of 10 and all letters, checked against the
/// transcribed Appendix A fixture.
Prop10Report verify_prop10(const std::vector<AppendixRecord>& fixture, int threads = 1);

/// ||M_alpha(kappa)|| for every kappa of n, via ribbon Schur expansions
/// (no word enumeration); returned in the Schur basis.
SymElement m_alpha_norms(int n, const Composition& alpha);

struct SpiderReport {
  int a = 0, b = 0, n = 0;
  bool schur_positive = false;
  bool e_positive = false;
  std::optional<std::pair<Partition, Rational>> schur_witness;
  bool chain_checked = false;  // b = 2: ||M_2|| - ||M_3||/2 >= 0 for all kappa
  bool chain_ok = false;
};

/// Direct Schur expansion of X_{S(a,b,1)} plus, for b = 2, the proof's
/// intermediate bound chain.
SpiderReport verify_spider_schur(int a, int b, int max_n = 20, int threads = 1);

}  // namespace csf

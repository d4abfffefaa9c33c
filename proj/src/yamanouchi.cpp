#include "csf/yamanouchi.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

#include "csf/graphs.hpp"
#include "csf/parallel.hpp"

namespace csf {

std::vector<Word> enumerate_yam(const Partition& kappa, const YamFilter& filter) {
  const int n = kappa.modulus();
  const int L = kappa.length();
  std::vector<Word> out;
  if (n == 0) return out;
  const Composition* alpha =
      filter.runtype_prefix.has_value() ? &filter.runtype_prefix.value() : nullptr;
  std::vector<int> used(static_cast<size_t>(L), 0);
  Word w;
  w.reserve(static_cast<size_t>(n));
  std::function<void(int, int, int)> rec = [&](int last, int run, int runlen) {
    const int pos = static_cast<int>(w.size());
    if (pos == n) {
      if (alpha) {
        if (run + 1 < alpha->length()) return;
        if (run < alpha->length() && runlen != alpha->part(run)) return;
      }
      out.push_back(w);
      return;
    }
    for (int c = 1; c <= L; ++c) {
      if (used[static_cast<size_t>(c - 1)] >= kappa.part(c - 1)) continue;
      if (c > 1 && used[static_cast<size_t>(c - 1)] >= used[static_cast<size_t>(c - 2)])
        continue;  // Yamanouchi prefix condition
      if (pos < static_cast<int>(filter.word_prefix.size()) &&
          filter.word_prefix[static_cast<size_t>(pos)] != c)
        continue;
      int nrun = run;
      int nlen = 0;
      if (pos == 0) {
        nrun = 0;
        nlen = 1;
      } else if (c > last) {
        nlen = runlen + 1;
      } else {
        if (runlen < 2) continue;  // only the last run may be short
        if (alpha && run < alpha->length() && runlen != alpha->part(run)) continue;
        nrun = run + 1;
        nlen = 1;
      }
      if (alpha && nrun < alpha->length() && nlen > alpha->part(nrun)) continue;
      w.push_back(c);
      ++used[static_cast<size_t>(c - 1)];
      rec(c, nrun, nlen);
      w.pop_back();
      --used[static_cast<size_t>(c - 1)];
    }
  };
  rec(0, 0, 0);
  return out;
}

Rational weight_m(const Word& y) {
  if (y.empty()) throw UsageError("weight_m: empty word");
  const long n = static_cast<long>(y.size());
  return pow2_rational(n + 2 - 2 * run_type(y).length());
}

Rational weight_m_shape_reading(const Word& y) {
  return pow2_rational(word_shape(y).ones());
}

WordMultiset multiset_M(const Partition& kappa, const YamFilter& filter) {
  WordMultiset out;
  for (const auto& y : enumerate_yam(kappa, filter)) out.add(y, weight_m(y) / 2);
  return out;
}

namespace {

// Proof decomposition of C_n: which of the five prefix classes the run type
// falls in; exactly one must match.
int classify_runtype(const Composition& tau, int k) {
  std::vector<int> hits;
  int s_prev = 0;
  for (int m = 0; m < tau.length(); ++m) {
    const int part = tau.part(m);
    const int s = s_prev + part;
    if (s == k - 1 && part >= 2) hits.push_back(5);
    if (s == k + 1 && part >= 3) hits.push_back(5);
    if (s == k && part == 2) hits.push_back(1);
    if (s == k && part >= 3) hits.push_back(3);
    if (s_prev == k - 2 && part >= 4) hits.push_back(2);
    if (s_prev <= k - 3 && part >= k - s_prev + 2) hits.push_back(4);
    s_prev = s;
  }
  if (hits.size() != 1)
    throw CheckFailure("I_1..I_5 classification of run type " + tau.str() + " at k=" +
                       std::to_string(k) + " matched " + std::to_string(hits.size()) +
                       " classes");
  return hits.front();
}

Word interval(int a, int b) {
  Word w;
  for (int v = a; v <= b; ++v) w.push_back(v);
  return w;
}

Word cat(std::initializer_list<Word> pieces) {
  Word w;
  for (const auto& p : pieces) w.insert(w.end(), p.begin(), p.end());
  return w;
}

Word erase_letter(Word run, int letter) {
  auto it = std::find(run.begin(), run.end(), letter);
  if (it == run.end()) throw CheckFailure("erase_letter: letter absent");
  run.erase(it);
  return run;
}

Word insert_letter(Word run, int letter) {
  if (std::find(run.begin(), run.end(), letter) != run.end())
    throw CheckFailure("insert_letter: letter already present");
  run.insert(std::upper_bound(run.begin(), run.end(), letter), letter);
  return run;
}

Word tail_from(const Word& y, size_t pos) { return Word(y.begin() + static_cast<long>(pos), y.end()); }

std::set<Word> support_set(const std::vector<Word>& ws) { return {ws.begin(), ws.end()}; }

}  // namespace

Rational schur_coeff_E(int n, int k, const Partition& kappa) {
  if (k < 2) throw UsageError("schur_coeff_E: k must be >= 2");
  if (n < 2 * k) throw UsageError("schur_coeff_E: needs n >= 2k");
  if (kappa.modulus() != n) throw UsageError("schur_coeff_E: |kappa| must equal n");
  Rational total = 0;
  for (const auto& y : enumerate_yam(kappa)) {
    const Rational half_m = weight_m(y) / 2;
    switch (classify_runtype(run_type(y), k)) {
      case 1: total -= half_m; break;
      case 2: total += half_m / 2; break;
      case 3: total -= half_m / 2; break;
      case 4: total += Rational(5, 8) * half_m; break;
      case 5: total += half_m; break;
    }
  }
  return total;
}

Rational schur_coeff_E_printed(int n, int k, const Partition& kappa) {
  if (k < 2) throw UsageError("schur_coeff_E_printed: k must be >= 2");
  if (n < 2 * k) throw UsageError("schur_coeff_E_printed: needs n >= 2k");
  if (kappa.modulus() != n) throw UsageError("schur_coeff_E_printed: |kappa| must equal n");
  Rational total = 0;
  for (const auto& y : enumerate_yam(kappa)) {
    const Rational half_m = weight_m(y) / 2;
    const Composition tau = run_type(y);
    int s_prev = 0;
    for (int m = 0; m < tau.length(); ++m) {
      const int part = tau.part(m);
      const int s = s_prev + part;
      if (s == k - 1 && part >= 2) total += half_m;
      if (s == k + 1 && part >= 3) total += half_m;
      if (s_prev == k - 2 && part >= 4) total += half_m / 2;
      if (s == k + 2 && part >= 2) {
        const int mult = std::min(part - 2, k) - 2;  // # of i in [3,k] with part >= i+2
        if (mult > 0) total += make_rational(5 * mult, 8) * half_m;
      }
      if (s == k && part == 2) total -= half_m;
      if (s == k && part >= 3) total -= half_m / 2;
      s_prev = s;
    }
  }
  return total;
}

Lemma42Result iota_lemma42(int j, const Partition& kappa) {
  if (j < 3) throw UsageError("iota_lemma42: j must be >= 3");
  const int n = kappa.modulus();
  if (n < j + 1) throw UsageError("iota_lemma42: needs |kappa| >= j+1");
  Lemma42Result res;
  const YamFilter from{Composition(std::vector<int>{j}), {}};
  const YamFilter to{Composition(std::vector<int>{j - 1}), {}};
  res.source = multiset_M(kappa, from).scaled(Rational(1, 2));
  res.target = multiset_M(kappa, to);
  for (const auto& y : enumerate_yam(kappa, from)) {
    auto rs = runs(y);
    if (rs.front() != interval(1, j)) throw CheckFailure("iota_lemma42: first run is not [j]");
    const bool j_in_2 = rs.size() > 1 && std::count(rs[1].begin(), rs[1].end(), j) > 0;
    WordMultiset img;
    if (!j_in_2) {  // Y1: move j from the first to the second run
      Word w = cat({interval(1, j - 1), insert_letter(rs[1], j)});
      for (size_t r = 2; r < rs.size(); ++r) w = cat({w, rs[r]});
      img.add(w, 1);
    } else if (rs.size() == 2) {  // Y3: y = [j][n-j]
      if (rs[1] != interval(1, n - j)) throw CheckFailure("iota_lemma42: Y3 shape violated");
      Word u = cat({interval(1, j - 1), {1}, {j}, interval(2, n - j)});
      Word v = cat({interval(1, j - 1), interval(1, j), interval(j, n - j)});
      img.add(u, Rational(1, 2));
      img.add(v, Rational(1, 2));
    } else if (std::count(rs[2].begin(), rs[2].end(), j) == 0) {  // Y2
      Word w = cat({interval(1, j - 1), rs[1], insert_letter(rs[2], j)});
      for (size_t r = 3; r < rs.size(); ++r) w = cat({w, rs[r]});
      img.add(w, 1);
    } else {  // Y4: y = [j][p][j] zeta
      const int p = static_cast<int>(rs[1].size());
      if (rs[1] != interval(1, p) || p < j) throw CheckFailure("iota_lemma42: Y4 second run");
      const size_t base = static_cast<size_t>(j + p);
      for (int i = 0; i < j; ++i)
        if (y[base + static_cast<size_t>(i)] != i + 1)
          throw CheckFailure("iota_lemma42: Y4 third run does not start with [j]");
      const Word zeta = tail_from(y, base + static_cast<size_t>(j));
      Word u = cat({interval(1, j - 1), {1}, {j}, interval(2, p), interval(1, j), zeta});
      Word v = cat({interval(1, j - 1), {1}, {j}, interval(1, p), interval(2, j), zeta});
      img.add(u, Rational(1, 2));
      img.add(v, Rational(1, 2));
    }
    res.iota.assign(y, img);
  }
  res.image = res.iota.image(res.source);
  res.well_defined = true;
  for (const auto& [w, m] : res.image.entries())
    if (!res.target.contains(w)) res.well_defined = false;
  res.multi_injection = res.image.submultiset_of(res.target);
  return res;
}

Lemma45Result injections_lemma45(Lemma45Bullet bullet, int z, const Partition& kappa) {
  const int n = kappa.modulus();
  Lemma45Result res;
  auto run_move = [&](const Word& y, int from_run, int to_run) {
    auto rs = runs(y);
    rs[static_cast<size_t>(from_run)] = erase_letter(rs[static_cast<size_t>(from_run)], 3);
    rs[static_cast<size_t>(to_run)] = insert_letter(rs[static_cast<size_t>(to_run)], 3);
    Word w;
    for (const auto& r : rs) w = cat({w, r});
    return w;
  };
  switch (bullet) {
    case Lemma45Bullet::B1: {
      if (n < 6) throw UsageError("lemma45 bullet 1 needs |kappa| >= 6");
      const YamFilter from{Composition(std::vector<int>{3, 2}), {}};
      const YamFilter to{Composition(std::vector<int>{2, 3}), {}};
      res.source = multiset_M(kappa, from);
      res.target = multiset_M(kappa, to);
      for (const auto& y : enumerate_yam(kappa, from)) {
        WordMultiset img;
        img.add(run_move(y, 0, 1), 1);
        res.iota.assign(y, img);
      }
      res.expected_residual = multiset_M(kappa, {std::nullopt, parse_compact_word("[2][3]3")});
      break;
    }
    case Lemma45Bullet::B2: {
      if (z < 4) throw UsageError("lemma45 bullet 2 needs z >= 4");
      if (n < z + 2) throw UsageError("lemma45 bullet 2 needs |kappa| >= z+2");
      const YamFilter from{Composition(std::vector<int>{2, z}), {}};
      const YamFilter to{Composition(std::vector<int>{3, z - 1}), {}};
      res.source = multiset_M(kappa, from);
      res.target = multiset_M(kappa, to);
      for (const auto& y : enumerate_yam(kappa, from)) {
        WordMultiset img;
        img.add(run_move(y, 1, 0), 1);
        res.iota.assign(y, img);
      }
      YamFilter residual_filter{Composition(std::vector<int>{3, z - 1}),
                                cat({interval(1, 3), interval(1, z - 1)})};
      res.expected_residual = multiset_M(kappa, residual_filter);
      break;
    }
    case Lemma45Bullet::B3: {
      if (n < 7) throw UsageError("lemma45 bullet 3 needs |kappa| >= 7");
      const Word p233 = parse_compact_word("[2][3]3");  // 121233
      res.source = multiset_M(kappa, {std::nullopt, p233});
      // target: union over z >= 4 of M_{3z}(kappa; [3][z]), i.e. words with
      // prefix 123123 whose second run has length >= 4
      for (const auto& w : enumerate_yam(kappa, {std::nullopt, parse_compact_word("[3][3]")})) {
        const Composition tau = run_type(w);
        if (tau.length() >= 2 && tau.part(0) == 3 && tau.part(1) >= 4)
          res.target.add(w, weight_m(w) / 2);
      }
      for (const auto& y : enumerate_yam(kappa, {std::nullopt, p233})) {
        WordMultiset img;
        img.add(run_move(y, 2, 0), 1);
        res.iota.assign(y, img);
      }
      break;
    }
  }
  res.image = res.iota.image(res.source);
  res.well_defined = true;
  for (const auto& [w, m] : res.image.entries())
    if (!res.target.contains(w)) res.well_defined = false;
  res.multi_injection = res.image.submultiset_of(res.target);
  res.m_scaling_ok = true;
  const Rational factor = bullet == Lemma45Bullet::B3 ? Rational(4) : Rational(1);
  for (const auto& [y, img] : res.iota.assignments())
    for (const auto& [w, c] : img.entries())
      if (weight_m(w) != factor * weight_m(y)) res.m_scaling_ok = false;
  if (bullet == Lemma45Bullet::B3) {
    std::set<Word> img_support, tgt_support;
    for (const auto& [w, m] : res.image.entries()) img_support.insert(w);
    for (const auto& [w, m] : res.target.entries()) tgt_support.insert(w);
    res.residual = WordMultiset::difference(res.target, res.image);
    res.residual_ok = img_support == tgt_support;
  } else {
    res.residual = WordMultiset::difference(res.target, res.image);
    res.residual_ok = res.residual == res.expected_residual;
  }
  return res;
}

std::map<int, XYSplit> build_xy(const Partition& kappa) {
  const int n = kappa.modulus();
  if (n < 9) throw UsageError("build_xy: needs |kappa| >= 9");
  const Word p233 = parse_compact_word("[2][3]3");
  const Word p331 = parse_compact_word("[3][3]1");
  const WordMultiset m23 = multiset_M(kappa, {Composition(std::vector<int>{2, 3}), {}});
  const WordMultiset m233 = multiset_M(kappa, {std::nullopt, p233});
  const WordMultiset x_appendix = m23.scaled(Rational(3, 2));
  const WordMultiset x_def = WordMultiset::difference(m23, m233).scaled(Rational(3, 2));
  WordMultiset y = multiset_M(kappa, {Composition(std::vector<int>{2, 4}), {}}).scaled(2);
  y = WordMultiset::disjoint_union(y, multiset_M(kappa, {std::nullopt, p331}));
  y = WordMultiset::disjoint_union(y, multiset_M(kappa, {Composition(std::vector<int>{2, 2}), {}}));
  const size_t p = static_cast<size_t>(std::min(10, n));  // split on letters p-1, p
  std::map<int, XYSplit> out;
  for (int t = 1; t <= kappa.length(); ++t) out[t];
  auto place = [&](const WordMultiset& src, int which) {
    for (const auto& [w, m] : src.entries()) {
      const int t = w[p - 1];
      const bool lt = w[p - 2] < t;
      XYSplit& slot = out[t];
      WordMultiset& dst = which == 0   ? (lt ? slot.x_lt : slot.x_ge)
                          : which == 1 ? (lt ? slot.x_lt_def : slot.x_ge_def)
                                       : (lt ? slot.y_lt : slot.y_ge);
      dst.add(w, m);
    }
  };
  place(x_appendix, 0);
  place(x_def, 1);
  place(y, 2);
  return out;
}

std::vector<AppendixRecord> load_appendix_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open fixture " + path);
  nlohmann::json j;
  in >> j;
  std::vector<AppendixRecord> out;
  for (const auto& r : j.at("records")) {
    AppendixRecord rec;
    rec.mu = Partition(r.at("mu").get<std::vector<int>>());
    rec.t = r.at("t").get<int>();
    rec.x_lt = parse_rational(r.at("X_lt").get<std::string>());
    rec.x_ge = parse_rational(r.at("X_ge").get<std::string>());
    rec.y_lt_min = parse_rational(r.at("Y_lt_min").get<std::string>());
    rec.y_ge_min = parse_rational(r.at("Y_ge_min").get<std::string>());
    auto words = [&](const char* key) {
      std::vector<Word> ws;
      for (const auto& s : r.at(key)) ws.push_back(parse_compact_word(s.get<std::string>()));
      return ws;
    };
    rec.x_lt_words = words("X_lt_words");
    rec.x_ge_words = words("X_ge_words");
    rec.y_lt_words = words("Y_lt_words");
    rec.y_ge_words = words("Y_ge_words");
    out.push_back(std::move(rec));
  }
  return out;
}

Prop10Report verify_prop10(const std::vector<AppendixRecord>& fixture, int threads) {
  const auto& mus = partitions_of(10);
  std::vector<std::map<int, XYSplit>> xys(mus.size());
  parallel_for(mus.size(), threads, [&](size_t i) { xys[i] = build_xy(mus[i]); });

  Prop10Report rep;
  std::set<std::pair<std::vector<int>, int>> nonempty_pairs;
  for (size_t i = 0; i < mus.size(); ++i) {
    bool any = false;
    for (const auto& [t, split] : xys[i]) {
      const Rational xl = split.x_lt.norm(), xg = split.x_ge.norm();
      const Rational yl = split.y_lt.norm(), yg = split.y_ge.norm();
      if (!split.x_lt_def.submultiset_of(split.x_lt) ||
          !split.x_ge_def.submultiset_of(split.x_ge))
        rep.failures.push_back("definition X not within the tabulated X at mu=" + mus[i].str());
      // the appendix variant dominates the definition variant, so checking it
      // checks both; assert both anyway
      if (xl > yl || split.x_lt_def.norm() > yl)
        rep.failures.push_back("||X_<|| > ||Y_<|| at mu=" + mus[i].str() + " t=" +
                               std::to_string(t) + ": " + rational_str(xl) + " > " +
                               rational_str(yl));
      if (xg > yg || split.x_ge_def.norm() > yg)
        rep.failures.push_back("||X_>=|| > ||Y_>=|| at mu=" + mus[i].str() + " t=" +
                               std::to_string(t) + ": " + rational_str(xg) + " > " +
                               rational_str(yg));
      if (!split.x_lt.empty() || !split.x_ge.empty()) {
        any = true;
        nonempty_pairs.insert({mus[i].parts(), t});
        rep.entries.push_back({mus[i], t, xl, xg, yl, yg});
      }
    }
    if (any) ++rep.nonempty_contents;
  }

  std::set<std::pair<std::vector<int>, int>> fixture_pairs;
  for (const auto& rec : fixture) {
    fixture_pairs.insert({rec.mu.parts(), rec.t});
    const auto it = std::find(mus.begin(), mus.end(), rec.mu);
    if (it == mus.end()) {
      rep.failures.push_back("fixture content " + rec.mu.str() + " is not a partition of 10");
      continue;
    }
    const auto& split = xys[static_cast<size_t>(it - mus.begin())].at(rec.t);
    const std::string where = " at mu=" + rec.mu.str() + " t=" + std::to_string(rec.t);
    if (split.x_lt.norm() != rec.x_lt)
      rep.failures.push_back("||X_<|| = " + rational_str(split.x_lt.norm()) + " != fixture " +
                             rational_str(rec.x_lt) + where);
    if (split.x_ge.norm() != rec.x_ge)
      rep.failures.push_back("||X_>=|| = " + rational_str(split.x_ge.norm()) + " != fixture " +
                             rational_str(rec.x_ge) + where);
    if (split.y_lt.norm() < rec.y_lt_min)
      rep.failures.push_back("||Y_<|| below fixture bound" + where);
    if (split.y_ge.norm() < rec.y_ge_min)
      rep.failures.push_back("||Y_>=|| below fixture bound" + where);
    auto support = [](const WordMultiset& m) {
      std::vector<Word> ws;
      for (const auto& [w, c] : m.entries()) ws.push_back(w);
      return support_set(ws);
    };
    if (support(split.x_lt) != support_set(rec.x_lt_words))
      rep.failures.push_back("X_< support differs from fixture" + where);
    if (support(split.x_ge) != support_set(rec.x_ge_words))
      rep.failures.push_back("X_>= support differs from fixture" + where);
    Rational ylw = 0, ygw = 0;
    for (const auto& w : rec.y_lt_words) {
      if (!split.y_lt.contains(w))
        rep.failures.push_back("fixture Y_< witness " + word_str(w) + " missing" + where);
      ylw += split.y_lt.multiplicity(w);
    }
    for (const auto& w : rec.y_ge_words) {
      if (!split.y_ge.contains(w))
        rep.failures.push_back("fixture Y_>= witness " + word_str(w) + " missing" + where);
      ygw += split.y_ge.multiplicity(w);
    }
    if (ylw != rec.y_lt_min)
      rep.failures.push_back("Y_< witness norms sum to " + rational_str(ylw) + ", fixture says " +
                             rational_str(rec.y_lt_min) + where);
    if (ygw != rec.y_ge_min)
      rep.failures.push_back("Y_>= witness norms sum to " + rational_str(ygw) +
                             ", fixture says " + rational_str(rec.y_ge_min) + where);
  }
  if (!fixture.empty() && fixture_pairs != nonempty_pairs)
    rep.failures.push_back("fixture (mu,t) pairs differ from the computed nonempty pairs");
  rep.pass = rep.failures.empty();
  return rep;
}

SymElement m_alpha_norms(int n, const Composition& alpha) {
  SymElement out(n, SymBasis::S);
  for (const auto& tau : admissible_run_types(n, alpha)) {
    const Rational w = pow2_rational(n + 1 - 2 * tau.length());
    for (const auto& [p, c] : ribbon_schur_expansion(tau.conjugate()))
      out.add_term(p, w * Rational(c));
  }
  return out;
}

SpiderReport verify_spider_schur(int a, int b, int max_n, int threads) {
  if (b < 1 || a < b) throw UsageError("verify_spider_schur: needs a >= b >= 1");
  const int n = a + b + 2;
  if (n > max_n)
    throw CapExceeded("verify_spider_schur: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_n));
  SpiderReport rep;
  rep.a = a;
  rep.b = b;
  rep.n = n;
  const SimpleGraph g = SimpleGraph::spider(Partition::from_multiset({a, b, 1}));
  const SymElement x = to_monomials(csf_powersum(g, 64, threads));
  const PositivityReport pos = positivity_report(x);
  rep.schur_positive = pos.schur_positive;
  rep.e_positive = pos.e_positive;
  rep.schur_witness = pos.schur_witness;
  if (b == 2) {
    rep.chain_checked = true;
    rep.chain_ok = true;
    const SymElement g2 = m_alpha_norms(n, Composition(std::vector<int>{2}));
    const SymElement g3 = m_alpha_norms(n, Composition(std::vector<int>{3}));
    for (const auto& kappa : partitions_of(n))
      if (g2.coeff(kappa) - g3.coeff(kappa) / 2 < 0) {
        rep.chain_ok = false;
        break;
      }
  }
  return rep;
}

}  // namespace csf

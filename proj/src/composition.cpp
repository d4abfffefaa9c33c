#include "csf/composition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace csf {

namespace {

std::vector<int> parse_bracket_list(const std::string& text) {
  std::string s = text;
  auto strip = [](std::string& t) {
    while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw UsageError("expected bracketed list, got '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    strip(item);
    if (item.empty()) throw UsageError("empty entry in '" + text + "'");
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw UsageError("bad entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string bracket_str(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw UsageError("composition parts must be positive");
  modulus_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
  return Composition(parse_bracket_list(text));
}

int Composition::count_of(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Composition::sign() const { return (modulus_ - length()) % 2 == 0 ? 1 : -1; }

Composition Composition::reversed() const {
  std::vector<int> p(parts_.rbegin(), parts_.rend());
  return Composition(std::move(p));
}

std::vector<int> Composition::descents() const {
  std::vector<int> d;
  int s = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    d.push_back(s);
  }
  return d;
}

Composition Composition::from_descents(int n, const std::vector<int>& d) {
  std::vector<int> parts;
  int prev = 0;
  for (int x : d) {
    parts.push_back(x - prev);
    prev = x;
  }
  if (n > 0) parts.push_back(n - prev);
  return Composition(std::move(parts));
}

// Subset model: D(I~) = { n - x : x in [n-1] \ D(I) }.
Composition Composition::conjugate() const {
  const int n = modulus_;
  std::vector<char> in(static_cast<size_t>(n) + 1, 0);
  for (int x : descents()) in[static_cast<size_t>(x)] = 1;
  std::vector<int> d;
  for (int x = n - 1; x >= 1; --x)
    if (!in[static_cast<size_t>(x)]) d.push_back(n - x);
  return from_descents(n, d);
}

Composition Composition::concat(const Composition& other) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(p));
}

Composition Composition::near_concat(const Composition& other) const {
  if (empty() || other.empty())
    throw UsageError("near concatenation needs nonempty operands");
  std::vector<int> p = parts_;
  p.back() += other.parts_.front();
  p.insert(p.end(), other.parts_.begin() + 1, other.parts_.end());
  return Composition(std::move(p));
}

std::string Composition::str() const { return bracket_str(parts_); }

Integer m_power(const Composition& I) { return pow2(I.ones()); }

bool refines(const Composition& I, const Composition& J) {
  if (I.modulus() != J.modulus())
    throw UsageError("refines: modulus mismatch " + I.str() + " vs " + J.str());
  const auto di = I.descents();
  const auto dj = J.descents();
  return std::includes(dj.begin(), dj.end(), di.begin(), di.end());
}

std::pair<Composition, Composition> concatenations(const Composition& I,
                                                   const Composition& J) {
  return {I.concat(J), I.near_concat(J)};
}

Integer lp(const Composition& J, const Composition& I) {
  if (!refines(I, J)) throw UsageError("lp: " + J.str() + " does not refine " + I.str());
  Integer prod = 1;
  size_t j = 0;
  for (int target : I.parts()) {
    int s = 0;
    int lastpart = 0;
    while (s < target) {
      lastpart = J.part(static_cast<int>(j));
      s += lastpart;
      ++j;
    }
    prod *= lastpart;
  }
  return prod;
}

namespace {

void enumerate_rec(int n, int min_part, const std::function<bool(const std::vector<int>&, int)>& keep,
                   std::vector<int>& acc, std::vector<Composition>& out) {
  if (n == 0) {
    if (keep(acc, 0)) out.emplace_back(acc);
    return;
  }
  for (int p = n; p >= min_part; --p) {  // lex-descending
    acc.push_back(p);
    if (keep(acc, n - p)) enumerate_rec(n - p, min_part, keep, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, CompositionFamily family) {
  if (n < 0) throw UsageError("enumerate_compositions: n must be >= 0");
  std::vector<Composition> out;
  if (n == 0) {
    // The empty composition belongs to "all" and C_n' only.
    if (family == CompositionFamily::All || family == CompositionFamily::CPartsGe2)
      out.emplace_back();
    return out;
  }
  std::vector<int> acc;
  // keep(acc, rem): prefix filter; with rem == 0 it is the final filter.
  std::function<bool(const std::vector<int>&, int)> keep;
  int min_part = 1;
  switch (family) {
    case CompositionFamily::All:
      keep = [](const std::vector<int>&, int) { return true; };
      break;
    case CompositionFamily::CLastOne:
      keep = [](const std::vector<int>& a, int rem) {
        if (a.back() > 2) return false;
        return rem > 0 || a.back() == 1;
      };
      break;
    case CompositionFamily::CPartsGe2:
      min_part = 2;
      keep = [](const std::vector<int>&, int) { return true; };
      break;
    case CompositionFamily::COneEnds:
      keep = [](const std::vector<int>& a, int rem) {
        if (a.back() > 2) return false;
        if (a.front() != 1) return false;
        return rem > 0 || a.back() == 1;
      };
      break;
  }
  enumerate_rec(n, min_part, keep, acc, out);
  return out;
}

std::vector<Composition> refinements_of(const Composition& I) {
  const int n = I.modulus();
  const auto base = I.descents();
  std::vector<int> free_pos;
  {
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (int x : base) in[static_cast<size_t>(x)] = 1;
    for (int x = 1; x <= n - 1; ++x)
      if (!in[static_cast<size_t>(x)]) free_pos.push_back(x);
  }
  std::vector<Composition> out;
  const size_t m = free_pos.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<int> d = base;
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t{1} << i)) d.push_back(free_pos[i]);
    std::sort(d.begin(), d.end());
    out.push_back(Composition::from_descents(n, d));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Composition> coarsenings_of(const Composition& I) {
  const int n = I.modulus();
  const auto base = I.descents();
  std::vector<Composition> out;
  const size_t m = base.size();
  for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
    std::vector<int> d;
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t{1} << i)) d.push_back(base[i]);
    out.push_back(Composition::from_descents(n, d));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool has_prefix(const Composition& I, const Composition& prefix) {
  if (prefix.length() > I.length()) return false;
  for (int i = 0; i < prefix.length(); ++i)
    if (I.part(i) != prefix.part(i)) return false;
  return true;
}

std::vector<Composition> admissible_run_types(int n, const Composition& prefix) {
  std::vector<Composition> out;
  if (prefix.modulus() > n) return out;
  for (int i = 0; i + 1 < prefix.length(); ++i)
    if (prefix.part(i) < 2) return out;  // non-last parts of a run type are >= 2
  if (!prefix.empty() && prefix.last() < 2 && prefix.modulus() != n)
    return out;  // prefix already ends with a non-final 1-run
  std::vector<int> acc = prefix.parts();
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.emplace_back(acc);
      return;
    }
    for (int p = rem; p >= 1; --p) {
      if (p == 1 && rem != 1) continue;  // a length-1 run may only be final
      acc.push_back(p);
      rec(rem - p);
      acc.pop_back();
    }
  };
  rec(n - prefix.modulus());
  return out;
}

bool is_hook(const Composition& I) {
  if (I.empty()) return false;
  for (int i = 0; i + 1 < I.length(); ++i)
    if (I.part(i) != 1) return false;
  return true;
}

std::vector<Composition> hooks_of_size(int m) {
  std::vector<Composition> out;
  for (int t = m; t >= 2; --t) {
    std::vector<int> p(static_cast<size_t>(m - t), 1);
    p.push_back(t);
    out.emplace_back(std::move(p));
  }
  out.emplace_back(std::vector<int>(static_cast<size_t>(m), 1));
  return out;
}

Composition HookDecomposition::compose() const {
  Composition r = hooks.front();
  for (size_t i = 1; i < hooks.size(); ++i)
    r = near[i - 1] ? r.near_concat(hooks[i]) : r.concat(hooks[i]);
  return r;
}

int HookDecomposition::sign() const {
  int s = 1;
  for (const auto& h : hooks) s *= h.sign();
  return s;
}

std::vector<HookDecomposition> hook_decompositions_rel(const Composition& I) {
  std::vector<HookDecomposition> out;
  if (I.empty()) return out;
  std::vector<Composition> hooks;
  std::vector<uint8_t> ops;
  std::function<void(int)> rec = [&](int idx) {
    if (idx == I.length()) {
      out.push_back({hooks, ops});
      return;
    }
    for (const auto& h : hooks_of_size(I.part(idx))) {
      hooks.push_back(h);
      if (idx == 0) {
        rec(1);
      } else {
        for (uint8_t op : {uint8_t{0}, uint8_t{1}}) {
          ops.push_back(op);
          rec(idx + 1);
          ops.pop_back();
        }
      }
      hooks.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<HookDecomposition> hook_decompositions_of(const Composition& J) {
  std::vector<HookDecomposition> out;
  if (J.empty()) return out;
  std::vector<Composition> hooks;
  std::vector<uint8_t> ops;
  // Peel the first hook off `rest`. A hook 1^s t sits either as a literal
  // prefix of rest's parts (followed by <| or nothing), or with t consuming
  // only part of rest's first non-1 part (followed by |>, the remainder of
  // that part going to the next hook).
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& rest) {
    const int len = static_cast<int>(rest.size());
    int lead = 0;
    while (lead < len && rest[static_cast<size_t>(lead)] == 1) ++lead;
    // literal all-ones prefixes 1^m
    for (int m = 1; m <= lead; ++m) {
      hooks.emplace_back(std::vector<int>(static_cast<size_t>(m), 1));
      if (m == len) {
        out.push_back({hooks, ops});
      } else {
        ops.push_back(0);
        rec(std::vector<int>(rest.begin() + m, rest.end()));
        ops.pop_back();
      }
      hooks.pop_back();
    }
    if (lead < len) {
      const int P = rest[static_cast<size_t>(lead)];  // >= 2
      // literal hook 1^lead P
      {
        std::vector<int> h(static_cast<size_t>(lead), 1);
        h.push_back(P);
        hooks.emplace_back(std::move(h));
        if (lead + 1 == len) {
          out.push_back({hooks, ops});
        } else {
          ops.push_back(0);
          rec(std::vector<int>(rest.begin() + lead + 1, rest.end()));
          ops.pop_back();
        }
        hooks.pop_back();
      }
      // hook 1^lead t with t < P, near-concatenated with what follows
      for (int t = 1; t < P; ++t) {
        std::vector<int> h(static_cast<size_t>(lead), 1);
        h.push_back(t);
        hooks.emplace_back(std::move(h));
        std::vector<int> rem(rest.begin() + lead, rest.end());
        rem[0] = P - t;
        ops.push_back(1);
        rec(rem);
        ops.pop_back();
        hooks.pop_back();
      }
    }
  };
  rec(J.parts());
  return out;
}

// --- Partition -------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw UsageError("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw UsageError("partition parts must be weakly decreasing");
  }
  modulus_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  return Partition(parse_bracket_list(text));
}

int Partition::count_of(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 1; !parts_.empty() && col <= parts_.front(); ++col) {
    int h = 0;
    for (int p : parts_)
      if (p >= col) ++h;
    out.push_back(h);
  }
  return Partition(std::move(out));
}

std::string Partition::str() const { return bracket_str(parts_); }

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.modulus() != lambda.modulus())
    throw UsageError("dominance_leq: modulus mismatch");
  int sm = 0, sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    sm += i < mu.length() ? mu.part(i) : 0;
    sl += i < lambda.length() ? lambda.part(i) : 0;
    if (sm > sl) return false;
  }
  return true;
}

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(Partition(acc));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      acc.push_back(p);
      rec(rem - p, p);
      acc.pop_back();
    }
  };
  if (n >= 0) rec(n, n == 0 ? 1 : n);
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace csf

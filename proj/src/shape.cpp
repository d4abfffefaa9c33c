#include "csf/shape.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace csf {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length())
    throw UsageError("skew shape: inner not contained in outer");
  for (int r = 0; r < inner_.length(); ++r)
    if (inner_.part(r) > outer_.part(r))
      throw UsageError("skew shape: inner not contained in outer");
}

int SkewShape::size() const { return outer_.modulus() - inner_.modulus(); }

int SkewShape::row_begin(int r) const {
  return (r <= inner_.length() ? inner_.part(r - 1) : 0) + 1;
}

int SkewShape::row_end(int r) const { return outer_.part(r - 1); }

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r)
    for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
  return out;
}

bool SkewShape::is_connected() const {
  auto bs = boxes();
  if (bs.empty()) return true;
  std::set<Box> all(bs.begin(), bs.end());
  std::vector<Box> stack{bs.front()};
  std::set<Box> seen{bs.front()};
  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    for (Box nb : {Box{b.row + 1, b.col}, Box{b.row - 1, b.col}, Box{b.row, b.col + 1},
                   Box{b.row, b.col - 1}}) {
      if (all.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        stack.push_back(nb);
      }
    }
  }
  return seen.size() == all.size();
}

bool SkewShape::has_2x2() const {
  auto bs = boxes();
  std::set<Box> all(bs.begin(), bs.end());
  for (const Box& b : bs)
    if (all.count({b.row + 1, b.col}) && all.count({b.row, b.col + 1}) &&
        all.count({b.row + 1, b.col + 1}))
      return true;
  return false;
}

SkewShape SkewShape::ribbon(const Composition& I) {
  if (I.empty()) return SkewShape();
  // Rows bottom-up are the reversed parts; each row ends where the row below
  // starts (they share exactly one column).
  std::vector<int> r(I.parts().rbegin(), I.parts().rend());
  const int l = static_cast<int>(r.size());
  std::vector<int> start(static_cast<size_t>(l));
  start[0] = 0;
  for (int k = 1; k < l; ++k) start[static_cast<size_t>(k)] = start[static_cast<size_t>(k - 1)] - r[static_cast<size_t>(k)] + 1;
  int shift = 1 - *std::min_element(start.begin(), start.end());
  std::vector<int> outer, inner;
  for (int k = 0; k < l; ++k) {
    int s = start[static_cast<size_t>(k)] + shift;
    outer.push_back(s + r[static_cast<size_t>(k)] - 1);
    inner.push_back(s - 1);
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  return SkewShape(Partition(outer), Partition(inner));
}

Composition SkewShape::ribbon_rows() const {
  if (!is_ribbon()) throw UsageError("not a ribbon shape");
  std::vector<int> rows_bottom_up;
  for (int r = 1; r <= rows(); ++r) rows_bottom_up.push_back(row_end(r) - row_begin(r) + 1);
  std::reverse(rows_bottom_up.begin(), rows_bottom_up.end());
  return Composition(std::move(rows_bottom_up));
}

Tableau::Tableau(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size())
    throw UsageError("tableau: entry count does not match shape size");
}

int Tableau::entry(const Box& b) const {
  auto bs = shape_.boxes();
  for (size_t i = 0; i < bs.size(); ++i)
    if (bs[i] == b) return entries_[i];
  throw UsageError("tableau: no such box");
}

bool Tableau::is_semistandard() const {
  auto bs = shape_.boxes();
  std::map<Box, int> at;
  for (size_t i = 0; i < bs.size(); ++i) at[bs[i]] = entries_[i];
  for (const auto& [b, v] : at) {
    if (v < 1) return false;
    auto right = at.find({b.row, b.col + 1});
    if (right != at.end() && right->second < v) return false;
    auto up = at.find({b.row + 1, b.col});
    if (up != at.end() && up->second <= v) return false;
  }
  return true;
}

std::vector<int> Tableau::content() const {
  std::vector<int> m;
  for (int v : entries_) {
    if (static_cast<size_t>(v) > m.size()) m.resize(static_cast<size_t>(v), 0);
    ++m[static_cast<size_t>(v - 1)];
  }
  return m;
}

Word Tableau::reading_word() const {
  auto bs = shape_.boxes();
  Word w;
  for (int r = 1; r <= shape_.rows(); ++r) {
    std::vector<int> row;
    for (size_t i = 0; i < bs.size(); ++i)
      if (bs[i].row == r) row.push_back(entries_[i]);
    w.insert(w.end(), row.rbegin(), row.rend());
  }
  return w;
}

Tableau Tableau::from_reading_word(const Word& w) {
  if (w.empty()) throw UsageError("empty reading word");
  SkewShape shape = SkewShape::ribbon(word_shape(w));
  auto rs = runs(w);
  // Run k fills the k-th column from the right, bottom to top.
  auto bs = shape.boxes();
  int maxcol = 0;
  for (const Box& b : bs) maxcol = std::max(maxcol, b.col);
  std::map<Box, int> at;
  int col = maxcol;
  for (const auto& run : rs) {
    std::vector<Box> column;
    for (const Box& b : bs)
      if (b.col == col) column.push_back(b);
    std::sort(column.begin(), column.end());
    if (column.size() != run.size()) throw CheckFailure("ribbon decode: column/run mismatch");
    for (size_t i = 0; i < run.size(); ++i) at[column[i]] = run[i];
    --col;
  }
  std::vector<int> entries;
  for (const Box& b : bs) entries.push_back(at.at(b));
  return Tableau(std::move(shape), std::move(entries));
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  auto bs = shape.boxes();
  if (bs.empty()) {
    out.emplace_back(shape, std::vector<int>{});
    return out;
  }
  std::map<Box, int> at;
  std::vector<int> entries(bs.size());
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == bs.size()) {
      out.emplace_back(shape, entries);
      return;
    }
    const Box& b = bs[i];
    int lo = 1;
    auto left = at.find({b.row, b.col - 1});
    if (left != at.end()) lo = std::max(lo, left->second);
    auto below = at.find({b.row - 1, b.col});
    if (below != at.end()) lo = std::max(lo, below->second + 1);
    for (int v = lo; v <= max_entry; ++v) {
      at[b] = v;
      entries[i] = v;
      rec(i + 1);
    }
    at.erase(b);
  };
  rec(0);
  return out;
}

namespace {

// Counts per shape after stacking horizontal strips of the given sizes.
std::map<Partition, Integer> kostka_column(const std::vector<int>& content) {
  std::map<Partition, Integer> state;
  state[Partition()] = 1;
  for (int k : content) {
    std::map<Partition, Integer> next;
    for (const auto& [shape, cnt] : state)
      for (const auto& bigger : add_horizontal_strips(shape, k)) next[bigger] += cnt;
    state = std::move(next);
  }
  return state;
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& p, int k) {
  // New row lengths q_i with q_i >= p_i and q_i <= p_{i-1} for i >= 2, plus
  // an optional new last row of at most p_last boxes.
  std::vector<Partition> out;
  const int rows = p.length();
  std::vector<int> q(static_cast<size_t>(rows) + 1, 0);
  std::function<void(int, int)> build = [&](int i, int rem) {
    if (i == rows) {  // the optional new shortest row takes the remainder
      int cap = rows > 0 ? std::min(p.part(rows - 1), rem) : rem;
      if (rem <= cap) {
        q[static_cast<size_t>(rows)] = rem;
        std::vector<int> parts;
        for (int j = 0; j <= rows; ++j)
          if (q[static_cast<size_t>(j)] > 0) parts.push_back(q[static_cast<size_t>(j)]);
        out.push_back(Partition(parts));
        q[static_cast<size_t>(rows)] = 0;
      }
      return;
    }
    const int base = p.part(i);
    const int cap = i == 0 ? base + rem : std::min(base + rem, p.part(i - 1));
    for (int v = cap; v >= base; --v) {
      q[static_cast<size_t>(i)] = v;
      build(i + 1, rem - (v - base));
      q[static_cast<size_t>(i)] = 0;
    }
  };
  build(0, k);
  return out;
}

Integer kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw UsageError("kostka: negative content entry");
    total += c;
  }
  if (total != lambda.modulus()) throw UsageError("kostka: modulus mismatch");
  std::vector<int> parts;
  for (int c : content)
    if (c > 0) parts.push_back(c);
  std::sort(parts.begin(), parts.end(), std::greater<>());

  static std::mutex mu;
  static std::map<std::vector<int>, std::map<Partition, Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(parts);
  if (it == cache.end()) it = cache.emplace(parts, kostka_column(parts)).first;
  auto jt = it->second.find(lambda);
  return jt == it->second.end() ? Integer(0) : jt->second;
}

KostkaTable::KostkaTable(int n) : parts_(partitions_of(n)) {
  k_.assign(parts_.size(), std::vector<Integer>(parts_.size(), Integer(0)));
  std::map<Partition, int> idx;
  for (size_t i = 0; i < parts_.size(); ++i) idx[parts_[i]] = static_cast<int>(i);
  for (size_t c = 0; c < parts_.size(); ++c) {
    auto col = kostka_column(parts_[c].parts());
    for (const auto& [shape, cnt] : col) k_[static_cast<size_t>(idx.at(shape))][c] = cnt;
  }
}

const KostkaTable& KostkaTable::of(int n) {
  static std::mutex mu;
  static std::map<int, KostkaTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, KostkaTable(n)).first;
  return it->second;
}

int KostkaTable::index(const Partition& p) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), p, std::greater<>());
  if (it == parts_.end() || *it != p) throw UsageError("KostkaTable: unknown partition");
  return static_cast<int>(it - parts_.begin());
}

}  // namespace csf

#include "csf/multiset.hpp"

namespace csf {

void WordMultiset::add(const Word& w, const Rational& m) {
  if (m < 0) throw UsageError("multiset multiplicities must be nonnegative");
  if (m == 0) return;
  mult_[w] += m;
}

Rational WordMultiset::multiplicity(const Word& w) const {
  auto it = mult_.find(w);
  return it == mult_.end() ? Rational(0) : it->second;
}

Rational WordMultiset::norm() const {
  Rational n = 0;
  for (const auto& [w, m] : mult_) n += m;
  return n;
}

WordMultiset WordMultiset::scaled(const Rational& r) const {
  if (r < 0) throw UsageError("multiset scale must be nonnegative");
  WordMultiset out;
  if (r == 0) return out;
  for (const auto& [w, m] : mult_) out.mult_[w] = m * r;
  return out;
}

WordMultiset WordMultiset::disjoint_union(const WordMultiset& a, const WordMultiset& b) {
  WordMultiset out = a;
  for (const auto& [w, m] : b.mult_) out.mult_[w] += m;
  return out;
}

WordMultiset WordMultiset::difference(const WordMultiset& a, const WordMultiset& b) {
  WordMultiset out;
  for (const auto& [w, m] : a.mult_) {
    Rational r = m - b.multiplicity(w);
    if (r > 0) out.mult_[w] = r;
  }
  return out;
}

WordMultiset WordMultiset::intersect_min(const WordMultiset& a, const WordMultiset& b) {
  WordMultiset out;
  for (const auto& [w, m] : a.mult_) {
    Rational r = std::min(m, b.multiplicity(w));
    if (r > 0) out.mult_[w] = r;
  }
  return out;
}

bool WordMultiset::submultiset_of(const WordMultiset& big) const {
  for (const auto& [w, m] : mult_)
    if (m > big.multiplicity(w)) return false;
  return true;
}

void MultiMap::assign(const Word& from, const WordMultiset& to) {
  if (!assign_.emplace(from, to).second) throw UsageError("MultiMap: duplicate source word");
}

const WordMultiset& MultiMap::at(const Word& from) const {
  auto it = assign_.find(from);
  if (it == assign_.end()) throw UsageError("MultiMap: no assignment for word");
  return it->second;
}

WordMultiset MultiMap::image(const WordMultiset& source) const {
  WordMultiset out;
  for (const auto& [w, m] : source.entries())
    for (const auto& [z, k] : at(w).entries()) out.add(z, m * k);
  return out;
}

bool MultiMap::is_multi_injection(const WordMultiset& source, const WordMultiset& target) const {
  return image(source).submultiset_of(target);
}

}  // namespace csf

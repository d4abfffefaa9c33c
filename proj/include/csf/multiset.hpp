#pragma once

#include <map>

#include "csf/word.hpp"

namespace csf {

/// Multiset of words with nonnegative exact-rational multiplicities.
class WordMultiset {
 public:
  WordMultiset() = default;

  void add(const Word& w, const Rational& m);
  Rational multiplicity(const Word& w) const;
  bool contains(const Word& w) const { return mult_.count(w) > 0; }
  const std::map<Word, Rational>& entries() const { return mult_; }
  std::size_t support_size() const { return mult_.size(); }
  bool empty() const { return mult_.empty(); }

  Rational norm() const;

  WordMultiset scaled(const Rational& r) const;
  static WordMultiset disjoint_union(const WordMultiset& a, const WordMultiset& b);
  /// max(m_A - m_B, 0) pointwise.
  static WordMultiset difference(const WordMultiset& a, const WordMultiset& b);
  /// min(m_A, m_B) pointwise.
  static WordMultiset intersect_min(const WordMultiset& a, const WordMultiset& b);

  bool submultiset_of(const WordMultiset& big) const;

  bool operator==(const WordMultiset&) const = default;

 private:
  std::map<Word, Rational> mult_;
};

/// Assignment of a finite multiset to each source word.
class MultiMap {
 public:
  void assign(const Word& from, const WordMultiset& to);
  const WordMultiset& at(const Word& from) const;
  bool has(const Word& from) const { return assign_.count(from) > 0; }
  const std::map<Word, WordMultiset>& assignments() const { return assign_; }

  /// Multiplicity-weighted union of assignments over the source.
  WordMultiset image(const WordMultiset& source) const;

  /// image(source) fits inside target pointwise.
  bool is_multi_injection(const WordMultiset& source, const WordMultiset& target) const;

 private:
  std::map<Word, WordMultiset> assign_;
};

}  // namespace csf

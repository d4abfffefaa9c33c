#pragma once

#include <compare>
#include <vector>

#include "csf/composition.hpp"
#include "csf/word.hpp"

namespace csf {

/// (row, column), French convention: row 1 is the bottom row.
struct Box {
  int row;
  int col;
  auto operator<=>(const Box&) const = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const;
  int rows() const { return outer_.length(); }
  int row_begin(int r) const;  // first column of row r (1-based), inclusive
  int row_end(int r) const;    // last column, inclusive; begin > end = empty

  /// Boxes row by row bottom-up, left to right within a row.
  std::vector<Box> boxes() const;

  bool is_connected() const;
  bool has_2x2() const;
  bool is_ribbon() const { return size() > 0 && is_connected() && !has_2x2(); }

  /// The ribbon of a composition (row lengths top to bottom).
  static SkewShape ribbon(const Composition& I);
  /// Row lengths top to bottom; rejects non-ribbon shapes.
  Composition ribbon_rows() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

class Tableau {
 public:
  Tableau(SkewShape shape, std::vector<int> entries);  // parallel to boxes()

  const SkewShape& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int entry(const Box& b) const;

  bool is_semistandard() const;
  std::vector<int> content() const;

  /// Reverse reading word: rows bottom-up, each right to left.
  Word reading_word() const;
  /// Inverse of reading_word on ribbon tableaux: runs fill the columns of
  /// sh(w) right to left, bottom to top.
  static Tableau from_reading_word(const Word& w);

  auto operator<=>(const Tableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

/// All semistandard tableaux of the given shape with entries <= max_entry,
/// in deterministic (lexicographic filling) order.
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

/// Kostka number K_{lambda,kappa}: semistandard tableaux of shape lambda and
/// content kappa (a weak composition). Cached, safe for concurrent use.
Integer kostka(const Partition& lambda, const std::vector<int>& content);

/// Full Kostka data for one degree: values for all shape/content pairs of
/// partitions of n. Built once per degree, synchronized.
class KostkaTable {
 public:
  static const KostkaTable& of(int n);

  const std::vector<Partition>& parts() const { return parts_; }
  int index(const Partition& p) const;
  const Integer& value(int shape_idx, int content_idx) const {
    return k_[static_cast<size_t>(shape_idx)][static_cast<size_t>(content_idx)];
  }
  const std::vector<Integer>& row(int shape_idx) const {
    return k_[static_cast<size_t>(shape_idx)];
  }

 private:
  explicit KostkaTable(int n);
  std::vector<Partition> parts_;
  std::vector<std::vector<Integer>> k_;
};

/// Shapes obtained from `p` by adding a horizontal strip of `k` boxes.
std::vector<Partition> add_horizontal_strips(const Partition& p, int k);

}  // namespace csf

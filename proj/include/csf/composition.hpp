#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csf/rational.hpp"

namespace csf {

/// A composition: finite sequence of positive integers. The empty sequence is
/// the unique composition of 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  static Composition parse(const std::string& text);  // "[2,1,1]"

  const std::vector<int>& parts() const { return parts_; }
  int modulus() const { return modulus_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  int first() const { return parts_.front(); }
  int last() const { return parts_.back(); }

  int count_of(int value) const;          // m_k(I)
  int ones() const { return count_of(1); }
  int sign() const;                       // epsilon^I = (-1)^{|I|-l(I)}

  Composition reversed() const;
  Composition conjugate() const;          // ribbon column lengths, right to left

  // Partial sums in [1, n-1]; a composition of n <-> subset of [n-1].
  std::vector<int> descents() const;
  static Composition from_descents(int n, const std::vector<int>& d);

  Composition concat(const Composition& other) const;       // I <| J
  Composition near_concat(const Composition& other) const;  // I |> J

  std::string str() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int modulus_ = 0;
};

Integer m_power(const Composition& I);  // m^I = 2^{m_1(I)}

/// True iff J refines I (I is obtained from J by summing consecutive blocks).
bool refines(const Composition& I, const Composition& J);

/// (I <| J, I |> J); near concatenation rejects empty operands.
std::pair<Composition, Composition> concatenations(const Composition& I,
                                                   const Composition& J);

/// Product of the ending parts of blocks of J with respect to I; needs
/// refines(I, J).
Integer lp(const Composition& J, const Composition& I);

enum class CompositionFamily {
  All,
  CLastOne,    // C_n: parts in {1,2}, last part 1
  CPartsGe2,   // C_n': all parts >= 2
  COneEnds,    // C_n'': parts in {1,2}, first = last = 1
};

/// Deterministic lexicographic-descending enumeration.
std::vector<Composition> enumerate_compositions(int n, CompositionFamily family);

std::vector<Composition> refinements_of(const Composition& I);   // all J >= I
std::vector<Composition> coarsenings_of(const Composition& I);   // all J <= I

/// Compositions of n whose non-last parts are all >= 2 (run types of the
/// paper's restricted Yamanouchi words), optionally with a fixed prefix.
std::vector<Composition> admissible_run_types(int n, const Composition& prefix);

bool has_prefix(const Composition& I, const Composition& prefix);

// --- hooks ---------------------------------------------------------------

bool is_hook(const Composition& I);             // of the form 1^s t
std::vector<Composition> hooks_of_size(int m);  // lex-descending

/// A ribbon decomposition into hooks: hooks_[i] joined by <| (near_[i]=false)
/// or |> (near_[i]=true).
struct HookDecomposition {
  std::vector<Composition> hooks;
  std::vector<uint8_t> near;  // size = hooks.size()-1

  Composition compose() const;
  int sign() const;  // product of the hooks' signs
};

/// H_I: all hook decompositions whose block sizes form I.
std::vector<HookDecomposition> hook_decompositions_rel(const Composition& I);

/// H(J): all hook decompositions of the fixed composition J.
std::vector<HookDecomposition> hook_decompositions_of(const Composition& J);

// --- partitions ----------------------------------------------------------

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);            // validates order
  static Partition from_multiset(std::vector<int> parts);  // sorts
  static Partition of(const Composition& I) { return from_multiset(I.parts()); }
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int modulus() const { return modulus_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  int count_of(int value) const;

  Partition conjugate() const;
  Composition as_composition() const { return Composition(parts_); }

  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int modulus_ = 0;
};

/// True iff every prefix sum of mu is <= the one of lambda (dominance order).
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All partitions of n, lex-descending ((n) first, (1^n) last).
const std::vector<Partition>& partitions_of(int n);

}  // namespace csf

#pragma once

#include <string>
#include <vector>

#include "csf/composition.hpp"

namespace csf {

/// Words are finite sequences of positive integers (letters).
using Word = std::vector<int>;

/// Maximal strictly increasing factors, in order.
std::vector<Word> runs(const Word& w);

/// Composition of run lengths tau_w; rejects the empty word.
Composition run_type(const Word& w);

/// sh(w) = conjugate(tau_w), as the ribbon's row composition (top to bottom).
Composition word_shape(const Word& w);

bool is_yamanouchi(const Word& w);

/// Letter multiplicities m_1(w), ..., m_L(w) up to the largest letter.
std::vector<int> word_content(const Word& w);

/// Appendix grammar: `[a]` -> 1..a, `[a,b]` -> a..b, `(d1d2...)` -> listed
/// digits, bare digit -> itself; juxtaposition concatenates.
Word parse_compact_word(const std::string& text);

std::string word_str(const Word& w);  // comma-separated letters
Word parse_word(const std::string& text);

}  // namespace csf

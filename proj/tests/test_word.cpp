#include "doctest.h"

#include <set>

#include "csf/shape.hpp"
#include "csf/word.hpp"

using namespace csf;

TEST_CASE("run factorization") {
  Word w{1, 2, 1, 2, 1, 3};
  auto rs = runs(w);
  REQUIRE(rs.size() == 3);
  CHECK(rs[0] == Word{1, 2});
  CHECK(rs[1] == Word{1, 2});
  CHECK(rs[2] == Word{1, 3});
  CHECK(run_type(w) == Composition({2, 2, 2}));
  CHECK(run_type(Word{1, 2, 1, 2, 3}) == Composition({2, 3}));
  CHECK_THROWS_AS(run_type(Word{}), UsageError);
}

TEST_CASE("yamanouchi") {
  CHECK(is_yamanouchi(Word{1, 2, 1, 2, 1, 3}));
  CHECK_FALSE(is_yamanouchi(Word{1, 2, 2}));
  CHECK(is_yamanouchi(Word{1}));
  CHECK(is_yamanouchi(Word{1, 2, 1, 3, 1, 2}));
}

TEST_CASE("yamanouchi contents are partitions") {
  // every word over [3] of length <= 6
  std::function<void(Word&)> rec = [&](Word& w) {
    if (is_yamanouchi(w) && !w.empty()) {
      auto c = word_content(w);
      for (size_t i = 0; i + 1 < c.size(); ++i) CHECK(c[i] >= c[i + 1]);
    }
    if (w.size() == 6) return;
    for (int l = 1; l <= 3; ++l) {
      w.push_back(l);
      rec(w);
      w.pop_back();
    }
  };
  Word w;
  rec(w);
}

TEST_CASE("word shape and ribbon shapes") {
  // sh of the ribbons 12 and 21 (paper anchors)
  CHECK(SkewShape::ribbon(Composition({1, 2})) ==
        SkewShape(Partition({2, 1}), Partition()));
  CHECK(SkewShape::ribbon(Composition({2, 1})) ==
        SkewShape(Partition({2, 2}), Partition({1})));
  // word shapes go through the run-type conjugate
  CHECK(word_shape(Word{1, 2}) == Composition({1, 1}));
  CHECK(word_shape(Word{2, 1}) == Composition({2}));
}

TEST_CASE("reading word bijection") {
  // decode(encode) = id on ribbon SSYT of size <= 7 (via all words), and
  // encode(decode) = id on words over [4] of length <= 7
  std::function<void(Word&)> rec = [&](Word& w) {
    if (!w.empty()) {
      Tableau t = Tableau::from_reading_word(w);
      CHECK(t.is_semistandard());
      CHECK(t.shape().is_ribbon());
      CHECK(t.reading_word() == w);
    }
    if (w.size() == 7) return;
    for (int l = 1; l <= 4; ++l) {
      w.push_back(l);
      rec(w);
      w.pop_back();
    }
  };
  Word w;
  rec(w);
}

TEST_CASE("ribbon SSYT round trip by enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& I : enumerate_compositions(n, CompositionFamily::All)) {
      const auto shape = SkewShape::ribbon(I);
      for (const auto& t : enumerate_ssyt(shape, n)) {
        const Word w = t.reading_word();
        CHECK(Tableau::from_reading_word(w) == t);
        CHECK(word_shape(w) == I);
      }
    }
}

TEST_CASE("compact word grammar") {
  CHECK(parse_compact_word("[2][3]") == Word{1, 2, 1, 2, 3});
  CHECK(parse_compact_word("[2](134)") == Word{1, 2, 1, 3, 4});
  CHECK(parse_compact_word("[2][3][2][2]1") == Word{1, 2, 1, 2, 3, 1, 2, 1, 2, 1});
  CHECK(parse_compact_word("[2,5]") == Word{2, 3, 4, 5});
  CHECK(parse_compact_word("7") == Word{7});
  CHECK(parse_compact_word("[3]15") == Word{1, 2, 3, 1, 5});
  CHECK_THROWS_AS(parse_compact_word("[3,2]"), UsageError);
  CHECK_THROWS_AS(parse_compact_word("[2"), UsageError);
  CHECK_THROWS_AS(parse_compact_word("(10)"), UsageError);
  CHECK_THROWS_AS(parse_compact_word("()"), UsageError);
  CHECK_THROWS_AS(parse_compact_word("0"), UsageError);
  // content check from the spec: alpha [2][2] 1 has content (5,4,1)
  auto y = parse_compact_word("[2][3][2][2]1");
  CHECK(word_content(y) == std::vector<int>{5, 4, 1});
}

TEST_CASE("word serialization") {
  CHECK(word_str(Word{1, 2, 10}) == "1,2,10");
  CHECK(parse_word("1,2,10") == Word{1, 2, 10});
}

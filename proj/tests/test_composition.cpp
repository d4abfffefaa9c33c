#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "csf/composition.hpp"
#include "csf/shape.hpp"

using namespace csf;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

// Literal box-grid conjugate: build the ribbon, read column lengths right to
// left. Oracle for the subset-model implementation.
Composition conjugate_by_boxes(const Composition& I) {
  auto shape = SkewShape::ribbon(I);
  auto boxes = shape.boxes();
  int maxcol = 0;
  for (const auto& b : boxes) maxcol = std::max(maxcol, b.col);
  std::vector<int> out;
  for (int c = maxcol; c >= 1; --c) {
    int h = 0;
    for (const auto& b : boxes)
      if (b.col == c) ++h;
    out.push_back(h);
  }
  return Composition(out);
}

// Exhaustive block-sum check.
bool refines_by_search(const Composition& I, const Composition& J) {
  size_t j = 0;
  for (int target : I.parts()) {
    int s = 0;
    while (s < target && j < J.parts().size()) s += J.parts()[j++];
    if (s != target) return false;
  }
  return j == J.parts().size();
}

std::vector<Composition> all_comps(int n) {
  return enumerate_compositions(n, CompositionFamily::All);
}

}  // namespace

TEST_CASE("composition basics") {
  CHECK(comp({2, 1, 1}).modulus() == 4);
  CHECK(comp({2, 1, 1}).length() == 3);
  CHECK(Composition().modulus() == 0);
  CHECK(comp({2, 1}).sign() == -1);  // (-1)^{3-2}
  CHECK(comp({1, 1}).sign() == 1);
  CHECK(m_power(comp({1, 2, 1})) == 4);
  CHECK(comp({3, 1, 2}).reversed() == comp({2, 1, 3}));
  CHECK(Composition::parse("[2,1,1]") == comp({2, 1, 1}));
  CHECK(comp({2, 1, 1}).str() == "[2,1,1]");
  CHECK_THROWS_AS(Composition::parse("[2,0]"), UsageError);
}

TEST_CASE("conjugate matches the paper anchors") {
  CHECK(comp({3}).conjugate() == comp({1, 1, 1}));
  CHECK(comp({1, 2}).conjugate() == comp({1, 2}));
  CHECK(comp({1, 3}).conjugate() == comp({1, 1, 2}));
}

TEST_CASE("conjugate is the box-grid conjugate and an involution") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& I : all_comps(n)) {
      CHECK(I.conjugate() == conjugate_by_boxes(I));
      CHECK(I.conjugate().conjugate() == I);
      CHECK(I.reversed().conjugate() == I.conjugate().reversed());
    }
}

TEST_CASE("refines") {
  CHECK(refines(comp({3}), comp({1, 2})));
  CHECK_FALSE(refines(comp({1, 2}), comp({2, 1})));
  CHECK(refines(comp({2, 2}), comp({1, 1, 2})));
  CHECK_THROWS_AS(refines(comp({2}), comp({3})), UsageError);
}

TEST_CASE("refinement properties against exhaustive search") {
  for (int n = 1; n <= 7; ++n) {
    const auto cs = all_comps(n);
    for (const auto& I : cs)
      for (const auto& J : cs) {
        const bool r = refines(I, J);
        CHECK(r == refines_by_search(I, J));
        CHECK(r == refines(J.conjugate(), I.conjugate()));  // conjugation reverses
        CHECK(r == refines(I.reversed(), J.reversed()));
      }
  }
}

TEST_CASE("concatenations") {
  CHECK(concatenations(comp({1}), comp({2})) == std::pair(comp({1, 2}), comp({3})));
  CHECK(concatenations(comp({1}), comp({1, 1})) == std::pair(comp({1, 1, 1}), comp({2, 1})));
  CHECK(concatenations(comp({2, 1}), comp({1, 3})) ==
        std::pair(comp({2, 1, 1, 3}), comp({2, 2, 3})));
  CHECK_THROWS_AS(Composition().near_concat(comp({1})), UsageError);
}

TEST_CASE("enumerate_compositions families") {
  const auto c4 = enumerate_compositions(4, CompositionFamily::CLastOne);
  CHECK(c4 == std::vector<Composition>{comp({2, 1, 1}), comp({1, 2, 1}), comp({1, 1, 1, 1})});
  const auto all3 = all_comps(3);
  CHECK(all3 == std::vector<Composition>{comp({3}), comp({2, 1}), comp({1, 2}), comp({1, 1, 1})});
  CHECK(enumerate_compositions(4, CompositionFamily::CPartsGe2) ==
        std::vector<Composition>{comp({4}), comp({2, 2})});

  for (int n = 1; n <= 12; ++n) {
    CHECK(all_comps(n).size() == (size_t{1} << (n - 1)));
    std::set<Composition> last_one, ge2, one_ends;
    for (const auto& I : all_comps(n)) {
      bool in12 = true;
      for (int p : I.parts()) in12 &= p <= 2;
      if (in12 && I.last() == 1) last_one.insert(I);
      bool ge = true;
      for (int p : I.parts()) ge &= p >= 2;
      if (ge) ge2.insert(I);
      if (in12 && I.first() == 1 && I.last() == 1) one_ends.insert(I);
    }
    auto as_set = [](const std::vector<Composition>& v) {
      return std::set<Composition>(v.begin(), v.end());
    };
    CHECK(as_set(enumerate_compositions(n, CompositionFamily::CLastOne)) == last_one);
    CHECK(as_set(enumerate_compositions(n, CompositionFamily::CPartsGe2)) == ge2);
    CHECK(as_set(enumerate_compositions(n, CompositionFamily::COneEnds)) == one_ends);
  }
}

TEST_CASE("lemma 3.2: m_1(I) = n + 2 - 2 l(conjugate) for parts in {1,2}") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& I : all_comps(n)) {
      bool in12 = true;
      for (int p : I.parts()) in12 &= p <= 2;
      if (in12) CHECK(I.ones() == n + 2 - 2 * I.conjugate().length());
    }
}

TEST_CASE("lp") {
  CHECK(lp(comp({1, 2}), comp({3})) == 2);
  CHECK(lp(comp({1, 1, 2, 1}), comp({2, 3})) == 1);
  CHECK(lp(comp({2, 3}), comp({2, 3})) == 6);
  CHECK_THROWS_AS(lp(comp({2, 1}), comp({1, 2})), UsageError);
}

TEST_CASE("refinements and coarsenings") {
  auto refs = refinements_of(comp({2}));
  CHECK(std::set<Composition>(refs.begin(), refs.end()) ==
        std::set<Composition>{comp({2}), comp({1, 1})});
  for (int n = 1; n <= 6; ++n)
    for (const auto& I : all_comps(n)) {
      for (const auto& J : refinements_of(I)) CHECK(refines(I, J));
      for (const auto& J : coarsenings_of(I)) CHECK(refines(J, I));
      CHECK(refinements_of(I).size() == (size_t{1} << (n - I.length())));
      CHECK(coarsenings_of(I).size() == (size_t{1} << (I.length() - 1)));
    }
}

TEST_CASE("hooks") {
  CHECK(is_hook(comp({1, 1, 3})));
  CHECK(is_hook(comp({4})));
  CHECK(is_hook(comp({1, 1})));
  CHECK_FALSE(is_hook(comp({2, 1})));
  CHECK(hooks_of_size(3) == std::vector<Composition>{comp({3}), comp({1, 2}), comp({1, 1, 1})});
}

TEST_CASE("hook decompositions relative to I") {
  auto h3 = hook_decompositions_rel(comp({3}));
  std::set<Composition> results;
  for (const auto& d : h3) results.insert(d.compose());
  CHECK(results == std::set<Composition>{comp({3}), comp({1, 2}), comp({1, 1, 1})});

  // H_{12} = {3 = 1|>2, 21 = 1|>11, 12 = 1<|2, 111 = 1<|11}
  auto h12 = hook_decompositions_rel(comp({1, 2}));
  REQUIRE(h12.size() == 4);
  std::set<std::pair<Composition, bool>> seen;
  for (const auto& d : h12) {
    REQUIRE(d.hooks.size() == 2);
    CHECK(d.hooks[0] == comp({1}));
    seen.insert({d.compose(), d.near[0] == 1});
  }
  CHECK(seen == std::set<std::pair<Composition, bool>>{{comp({3}), true},
                                                       {comp({2, 1}), true},
                                                       {comp({1, 2}), false},
                                                       {comp({1, 1, 1}), false}});
}

TEST_CASE("hook decompositions of a fixed J") {
  auto h2 = hook_decompositions_of(comp({2}));
  REQUIRE(h2.size() == 2);
  std::set<size_t> hook_counts;
  for (const auto& d : h2) {
    CHECK(d.compose() == comp({2}));
    hook_counts.insert(d.hooks.size());
  }
  CHECK(hook_counts == std::set<size_t>{1, 2});

  // grouping H_I over all I of n by composed result recovers every H(J)
  for (int n = 1; n <= 6; ++n) {
    std::map<Composition, int> by_result;
    for (const auto& I : all_comps(n))
      for (const auto& d : hook_decompositions_rel(I)) ++by_result[d.compose()];
    for (const auto& J : all_comps(n))
      CHECK(static_cast<size_t>(by_result[J]) == hook_decompositions_of(J).size());
  }
}

TEST_CASE("partitions") {
  CHECK(Partition::of(comp({1, 3, 2})) == Partition({3, 2, 1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(partitions_of(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition({1, 1, 1}), Partition({3})));
  CHECK_FALSE(dominance_leq(Partition({3}), Partition({1, 1, 1})));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({3})), UsageError);
  // lex order refines dominance
  const auto& ps = partitions_of(7);
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = 0; j < ps.size(); ++j)
      if (dominance_leq(ps[i], ps[j]) && ps[i] != ps[j]) CHECK(ps[i] < ps[j]);
}

TEST_CASE("admissible run types") {
  for (int n = 1; n <= 9; ++n) {
    auto all = admissible_run_types(n, Composition());
    std::set<Composition> expect;
    for (const auto& I : all_comps(n)) {
      bool ok = true;
      for (int i = 0; i + 1 < I.length(); ++i) ok &= I.part(i) >= 2;
      if (ok) expect.insert(I);
    }
    CHECK(std::set<Composition>(all.begin(), all.end()) == expect);
    // conjugation pairs admissible run types with C_n
    for (const auto& t : all) {
      const auto c = t.conjugate();
      bool in12 = true;
      for (int p : c.parts()) in12 &= p <= 2;
      CHECK(in12);
      CHECK(c.last() == 1);
    }
  }
}

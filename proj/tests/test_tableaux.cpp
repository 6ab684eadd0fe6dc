#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "mjdt/jdt.hpp"
#include "mjdt/tableau.hpp"
#include "oracle.hpp"

using namespace mjdt;

namespace {

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mjdt::Error");
  return ErrorCode::ParseError;
}

Filling rows_filling(const Shape& shape, const std::vector<std::vector<int>>& rows) {
  std::vector<int> entries;
  for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  return Filling(shape, entries);
}

}  // namespace

TEST_CASE("is_standard") {
  CHECK(is_standard(fixtures::grid(fixtures::kP)));
  CHECK_FALSE(is_standard(fixtures::grid(fixtures::kR)));
  CHECK(is_standard(Filling(make_shape({1}), {1})));
}

TEST_CASE("Filling rejects non-bijective entries") {
  const Shape s = make_shape({2, 1});
  CHECK(error_of([&] { Filling(s, {1, 1, 2}); }) == ErrorCode::InvalidFilling);
  CHECK(error_of([&] { Filling(s, {1, 2}); }) == ErrorCode::InvalidFilling);
  CHECK(error_of([&] { Filling(s, {1, 2, 4}); }) == ErrorCode::InvalidFilling);
}

TEST_CASE("enumerate_standard counts") {
  CHECK(enumerate_standard(make_shape({3, 3, 2})).size() == 42);
  CHECK(enumerate_standard(make_shape({1})).size() == 1);
  const auto two_two = enumerate_standard(make_shape({2, 2}));
  REQUIRE(two_two.size() == 2);
  // Frozen from the brute-force filter of all 4! fillings.
  CHECK(reading_word(two_two[0]).word() == std::vector<int>{1, 2, 3, 4});
  CHECK(reading_word(two_two[1]).word() == std::vector<int>{1, 3, 2, 4});
  CHECK(enumerate_standard(make_shape({})).size() == 1);
}

TEST_CASE("enumerate_standard enforces the cap") {
  const Shape big = make_shape({21});
  CHECK(error_of([&] { enumerate_standard(big); }) == ErrorCode::TooLarge);
  CHECK(enumerate_standard(big, true).size() == 1);
}

TEST_CASE("enumeration matches the brute-force filter on all shape families") {
  struct Case {
    std::vector<int> outer, inner;
    bool shifted;
  };
  const std::vector<Case> cases = {
      {{3, 3, 2}, {}, false},   {{3, 2}, {1}, false},      {{2, 2, 1}, {}, false},
      {{4, 2, 1}, {}, true},    {{3, 2, 1}, {2}, true},    {{4, 2}, {1}, true},
      {{6, 5, 4, 2}, {5, 3}, true}, {{4, 4, 2}, {2, 1}, false},
  };
  for (const auto& c : cases) {
    const Shape s = make_shape(c.outer, c.inner, c.shifted);
    CAPTURE(s.spec());
    const auto expected = oracle::standard_words(oracle::cells(c.outer, c.inner, c.shifted));
    const auto got = enumerate_standard(s);
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(reading_word(got[k]).word() == expected[k]);
      CHECK(lex_index(got[k], got) == k);
      if (k > 0) {
        CHECK(std::lexicographical_compare(expected[k - 1].begin(), expected[k - 1].end(),
                                           expected[k].begin(), expected[k].end()));
      }
    }
  }
}

TEST_CASE("hook length formula on straight shapes up to n = 8") {
  const std::vector<std::vector<int>> shapes = {
      {1},       {2, 1},    {2, 2},    {3, 1},       {3, 2, 1}, {4, 2},
      {3, 3},    {2, 2, 2}, {4, 3, 1}, {3, 3, 2},    {5, 2, 1}, {4, 4},
      {2, 2, 1, 1}, {3, 2, 2, 1}, {8},  {1, 1, 1, 1, 1, 1, 1, 1},
  };
  for (const auto& parts : shapes) {
    const Shape s = make_shape(parts);
    CAPTURE(s.spec());
    const std::uint64_t hooks = hook_product(s);
    CHECK(hooks == oracle::hook_product(oracle::cells(parts, {}, false)));
    CHECK(enumerate_standard(s).size() == oracle::factorial(s.size()) / hooks);
  }
}

TEST_CASE("hook_product values and errors") {
  CHECK(hook_product(make_shape({3, 3, 2})) == 960);
  CHECK(hook_product(make_shape({1})) == 1);
  CHECK(hook_product(make_shape({2, 2})) == 12);
  CHECK(error_of([] { hook_product(make_shape({3, 2}, {}, true)); }) == ErrorCode::Unsupported);
  CHECK(error_of([] { hook_product(make_shape({3, 2}, {1})); }) == ErrorCode::Unsupported);
}

TEST_CASE("reading_word") {
  CHECK(reading_word(fixtures::grid(fixtures::kP)).word() ==
        std::vector<int>{2, 1, 5, 3, 4, 6, 8, 7, 9});
  CHECK(reading_word(Filling(make_shape({1}), {1})).word() == std::vector<int>{1});
  CHECK(reading_word(fixtures::grid(fixtures::kQ)).word() ==
        std::vector<int>{4, 3, 6, 1, 2, 5, 8, 7, 9});
}

TEST_CASE("lex_index") {
  const auto universe = enumerate_standard(make_shape({3, 3, 2}));
  CHECK(reading_word(universe.front()).word() == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(lex_index(universe.front(), universe) == 0);
  const Filling nps = canonical_order(make_shape({3, 3, 2}), CanonicalOrder::NpsColumn);
  CHECK(reading_word(nps).word() == std::vector<int>{1, 4, 7, 2, 5, 8, 3, 6});
  // Frozen from the brute-force sorted enumeration.
  CHECK(lex_index(nps, universe) == 41);

  const auto small = enumerate_standard(make_shape({2, 1}));
  CHECK(lex_index(Filling(make_shape({2, 1}), {1, 2, 3}), small) == 0);
  CHECK(lex_index(Filling(make_shape({2, 1}), {1, 3, 2}), small) == 1);
  CHECK(error_of([&] { lex_index(Filling(make_shape({2, 1}), {2, 1, 3}), small); }) ==
        ErrorCode::NotFound);
}

TEST_CASE("apply_permutation and inverse on the running example") {
  const Permutation pi(fixtures::kPi);
  const Filling p = fixtures::grid(fixtures::kP);
  const Filling q = fixtures::grid(fixtures::kQ);
  CHECK(apply_permutation(p, pi) == fixtures::grid(fixtures::kR));
  CHECK(inverse(pi).word() == std::vector<int>{6, 7, 1, 8, 4, 5, 9, 2, 3});
  CHECK(apply_permutation(q, inverse(pi)) == fixtures::grid(fixtures::kQPiInverse));
  CHECK(apply_permutation(p, Permutation::identity(9)) == p);
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  CHECK(inverse(Permutation({2, 1})) == Permutation({2, 1}));
  CHECK(error_of([] { Permutation({1, 1, 2}); }) == ErrorCode::InvalidPermutation);
}

TEST_CASE("property: permuting by p then p^-1 is the identity") {
  std::mt19937 rng(11);
  const Shape s = make_shape({4, 3, 1}, {1}, false);
  std::vector<int> base(s.size());
  std::iota(base.begin(), base.end(), 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> f = base;
    std::vector<int> w = base;
    std::shuffle(f.begin(), f.end(), rng);
    std::shuffle(w.begin(), w.end(), rng);
    const Filling filling(s, f);
    const Permutation p(w);
    CHECK(apply_permutation(apply_permutation(filling, p), inverse(p)) == filling);
    std::vector<int> composed(w.size());
    const Permutation inv = inverse(p);
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) composed[i - 1] = p(inv(i));
    CHECK(composed == base);
  }
}

TEST_CASE("canonical orders") {
  const Shape normal = make_shape({3, 3, 2});
  CHECK(canonical_order(normal, CanonicalOrder::NpsColumn) ==
        rows_filling(normal, {{1, 4, 7}, {2, 5, 8}, {3, 6}}));

  const Shape one = make_shape({1});
  CHECK(canonical_order(one, CanonicalOrder::NpsColumn) == Filling(one, {1}));
  CHECK(canonical_order(one, CanonicalOrder::RowwiseBottomUpRightLeft) == Filling(one, {1}));

  // The bottom row's rightmost cell is processed first, so it carries n.
  const Shape shifted = make_shape({3, 2}, {}, true);
  const Filling rowwise = canonical_order(shifted, CanonicalOrder::RowwiseBottomUpRightLeft);
  CHECK(rowwise == rows_filling(shifted, {{1, 2, 3}, {4, 5}}));
  CHECK(is_standard(rowwise));
  CHECK(rowwise.cell_of(5) == Cell{2, 3});

  CHECK(error_of([&] { canonical_order(shifted, CanonicalOrder::NpsColumn); }) ==
        ErrorCode::Unsupported);

  for (const Shape& s : {make_shape({4, 2, 1}), make_shape({5, 3, 3, 1}, {2, 1}),
                         make_shape({4, 2, 1}, {}, true), make_shape({6, 5, 4, 2}, {5, 3}, true)}) {
    CHECK(is_standard(canonical_order(s, CanonicalOrder::RowwiseBottomUpRightLeft)));
    if (!s.shifted()) CHECK(is_standard(canonical_order(s, CanonicalOrder::NpsColumn)));
  }
}

TEST_CASE("property: modified jdt output is standard") {
  std::mt19937 rng(5);
  const std::vector<Shape> shapes = {make_shape({3, 3, 2}), make_shape({4, 2}, {1}, true),
                                     make_shape({6, 5, 4, 2}, {5, 3}, true),
                                     make_shape({4, 4, 2}, {2, 1})};
  for (const Shape& s : shapes) {
    const auto universe = enumerate_standard(s);
    std::vector<int> t(s.size());
    std::iota(t.begin(), t.end(), 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(t.begin(), t.end(), rng);
      const Filling& order = universe[rng() % universe.size()];
      CHECK(is_standard(modified_jdt(Filling(s, t), order)));
    }
  }
}

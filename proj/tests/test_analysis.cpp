#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "mjdt/analysis.hpp"
#include "oracle.hpp"

using namespace mjdt;
using fixtures::grid;

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

struct Family {
  std::vector<int> outer, inner;
  bool shifted;
};

}  // namespace

TEST_CASE("a_matrix on tiny shapes") {
  const CountMatrix one = a_matrix(make_shape({1}));
  CHECK(one.counts == std::vector<std::vector<std::uint64_t>>{{1}});

  // Frozen from the brute force over all 6 tabloids.
  const CountMatrix m = a_matrix(make_shape({2, 1}));
  CHECK(m.counts == std::vector<std::vector<std::uint64_t>>{{3, 3}, {3, 3}});
  CHECK(m.is_symmetric());
}

TEST_CASE("a_matrix agrees with the direct tabloid count") {
  const std::vector<Family> families = {{{2, 2}, {}, false},        {{3, 1}, {}, false},
                                        {{3, 2}, {1}, false},       {{3, 2}, {}, true},
                                        {{3, 2, 1}, {2}, true},     {{4, 2}, {1}, true},
                                        {{2, 2, 1}, {}, false},     {{4, 2, 1}, {3, 1}, false}};
  for (const auto& f : families) {
    const Shape s = make_shape(f.outer, f.inner, f.shifted);
    CAPTURE(s.spec());
    const CountMatrix m = a_matrix(s);
    CHECK(m.counts == oracle::a_matrix(oracle::cells(f.outer, f.inner, f.shifted)));
    CHECK(m.is_symmetric());
  }
}

TEST_CASE("the (3,3,2) matrix obeys the expected laws") {
  const CountMatrix m = a_matrix(make_shape({3, 3, 2}), {4, false});
  REQUIRE(m.counts.size() == 42);
  CHECK(m.is_symmetric());
  std::set<std::uint64_t> values;
  for (std::size_t p = 0; p < 42; ++p) {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    for (std::size_t q = 0; q < 42; ++q) {
      row += m.counts[p][q];
      col += m.counts[q][p];
      values.insert(m.counts[p][q]);
    }
    CHECK(row == 40320);
    CHECK(col == 40320);
  }
  CHECK(values == std::set<std::uint64_t>{936, 944, 960, 976, 984, 996});
}

TEST_CASE("a_matrix is independent of the worker count") {
  const Shape s = make_shape({3, 2, 1});
  const CountMatrix serial = a_matrix(s, {1, false});
  for (std::size_t workers : {2u, 3u, 7u}) {
    CHECK(a_matrix(s, {workers, false}).counts == serial.counts);
  }
}

TEST_CASE("exhaustive cap") {
  const Shape big = make_shape({5, 5});
  CHECK(error_of([&] { a_matrix(big); }) == ErrorCode::TooLarge);
  CHECK(error_of([&] { verify_involution(big, SweepMode::exhaustive()); }) ==
        ErrorCode::TooLarge);
  // Sampled sweeps are not capped by the exhaustive limit.
  CHECK(verify_involution(big, SweepMode::sampled(1, 20)).passed);
}

TEST_CASE("the running example satisfies each identity") {
  const Filling r = grid(fixtures::kR);
  const Filling p = grid(fixtures::kP);
  const Filling q = grid(fixtures::kQ);
  const Permutation pi(fixtures::kPi);

  const PairedState once = fj(r, p);
  CHECK(fj(once.first, once.second) == PairedState{r, p});
  CHECK(bj(r, p) == once);
  CHECK(p.at(r.cell_of(1)) == 6);
  CHECK(fj_via_first_step_down(r, p) == once);

  CHECK(modified_jdt(apply_permutation(p, pi), p) == q);
  CHECK(modified_jdt(apply_permutation(q, inverse(pi)), q) == p);
}

TEST_CASE("identity permutation and (S, S) cases") {
  for (const Filling& s : enumerate_standard(make_shape({3, 2}, {1}))) {
    CHECK(modified_jdt(apply_permutation(s, Permutation::identity(s.size())), s) == s);
    CHECK(fj(s, s) == PairedState{s, s});
    CHECK(bj(s, s) == PairedState{s, s});
    CHECK(fj_via_first_step_down(s, s) == PairedState{s, s});
  }
}

TEST_CASE("symmetry holds exhaustively") {
  for (const Shape& s : {make_shape({2, 2}), make_shape({3, 1}), make_shape({3, 2}, {}, true),
                         make_shape({3, 2}, {1})}) {
    const VerificationReport r = verify_symmetry(s, SweepMode::exhaustive());
    CAPTURE(r.shape);
    CHECK(r.passed);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.cases_checked == oracle::factorial(s.size()) * enumerate_standard(s).size());
  }
}

TEST_CASE("proof identities hold on every family up to n = 5") {
  const std::vector<Shape> shapes = {
      make_shape({3, 2}),          make_shape({2, 2, 1}),       make_shape({4, 1}),
      make_shape({3, 3}, {1}),     make_shape({3, 2, 1}, {1, 1}), make_shape({4, 1}, {}, true),
      make_shape({3, 2}, {}, true), make_shape({4, 2}, {1}, true), make_shape({3, 2, 1}, {2}, true),
  };
  for (const Shape& s : shapes) {
    CAPTURE(s.spec());
    const SweepMode mode = SweepMode::exhaustive();
    CHECK(verify_involution(s, mode).passed);
    CHECK(verify_fj_eq_bj(s, mode).passed);
    CHECK(verify_identity_eq1(s, mode).passed);
    CHECK(verify_pi_tracking(s, mode).passed);
    CHECK(verify_paths(s, mode).passed);
  }
}

TEST_CASE("sampled reports are reproducible") {
  const Shape s = make_shape({6, 5, 4, 2}, {5, 3}, true);
  const VerificationReport a = verify_fj_eq_bj(s, SweepMode::sampled(42, 200));
  const VerificationReport b = verify_fj_eq_bj(s, SweepMode::sampled(42, 200));
  CHECK(a == b);
  CHECK(a.passed);
  CHECK(a.cases_checked == 200);
  CHECK(a.mode.seed == 42);
}

TEST_CASE("constancy") {
  const Shape normal = make_shape({3, 3, 2});
  const VerificationReport nps =
      verify_constancy(normal, canonical_order(normal, CanonicalOrder::NpsColumn), {2, false});
  CHECK(nps.passed);
  CHECK(nps.common_value == 960u);
  CHECK(nps.hook_product == 960u);

  const Shape one = make_shape({1});
  const VerificationReport trivial = verify_constancy(one, Filling(one, {1}));
  CHECK(trivial.passed);
  CHECK(trivial.common_value == 1u);

  const Shape shifted = make_shape({4, 2, 1}, {}, true);
  const VerificationReport footnote =
      verify_constancy(shifted, canonical_order(shifted, CanonicalOrder::RowwiseBottomUpRightLeft));
  CHECK(footnote.passed);
  REQUIRE(footnote.common_value.has_value());
  CHECK(*footnote.common_value * enumerate_standard(shifted).size() == 5040);
  CHECK_FALSE(footnote.hook_product.has_value());
}

TEST_CASE("a failing constancy report carries a checkable counterexample") {
  const Shape normal = make_shape({3, 3, 2});
  const auto universe = enumerate_standard(normal);
  const VerificationReport r = verify_constancy(normal, universe[5]);
  CHECK_FALSE(r.passed);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->find("A[order][0] = 960") != std::string::npos);
  const auto row = a_row(normal, universe[5]);
  CHECK(row[0] == 960);
  CHECK(row[5] == 976);
}

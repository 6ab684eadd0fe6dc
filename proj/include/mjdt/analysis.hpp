#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mjdt/jdt.hpp"

namespace mjdt {

// Largest n for which exhaustive sweeps run without `force_large`.
inline constexpr std::size_t kExhaustiveCap = 9;

// counts[p][q] = number of tabloids T with modified_jdt(T, tableaux[p]) ==
// tableaux[q]. Rows index the order tableau P, columns the output Q.
struct CountMatrix {
  Shape shape;
  std::vector<Filling> tableaux;
  std::vector<std::vector<std::uint64_t>> counts;

  bool is_symmetric() const;
};

struct MatrixOptions {
  std::size_t workers = 1;
  bool force_large = false;
};

CountMatrix a_matrix(const Shape& shape, const MatrixOptions& options = {});

// Computes the single row A_{order, .} indexed like enumerate_standard(shape).
std::vector<std::uint64_t> a_row(const Shape& shape, const Filling& order,
                                 const MatrixOptions& options = {});

enum class SweepKind { Exhaustive, Sampled };

struct SweepMode {
  SweepKind kind = SweepKind::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  bool force_large = false;

  static SweepMode exhaustive(bool force_large = false) {
    return {SweepKind::Exhaustive, 0, 0, force_large};
  }
  static SweepMode sampled(std::uint64_t seed, std::uint64_t samples) {
    return {SweepKind::Sampled, seed, samples, false};
  }

  friend bool operator==(const SweepMode&, const SweepMode&) = default;
};

struct VerificationReport {
  std::string property;
  std::string shape;
  SweepMode mode;
  std::uint64_t cases_checked = 0;
  bool passed = true;
  // Filling-text serialisation of the first failing case.
  std::optional<std::string> counterexample;
  // Constancy checks only.
  std::optional<std::uint64_t> common_value;
  std::optional<std::uint64_t> hook_product;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// MJ_P(P_pi) = Q  <=>  MJ_Q(Q_{pi^-1}) = P over (P, pi).
VerificationReport verify_symmetry(const Shape& shape, const SweepMode& mode);
// fj(fj(T, S)) = (T, S).
VerificationReport verify_involution(const Shape& shape, const SweepMode& mode);
// fj(T, S) = bj(T, S).
VerificationReport verify_fj_eq_bj(const Shape& shape, const SweepMode& mode);
// fj(T, S) = switch . J^1..J^{k-1} J^{k+1}..J^n . J_1 (T, S), k = S at the cell of 1 in T.
VerificationReport verify_identity_eq1(const Shape& shape, const SweepMode& mode);
// Every intermediate pair (X, Y) of fj(P_pi, P) satisfies X = Y_pi.
VerificationReport verify_pi_tracking(const Shape& shape, const SweepMode& mode);
// MJ output is standard, forward moves go right/down, backward moves go
// left/up, and every intermediate filling is a bijection onto 1..n.
VerificationReport verify_paths(const Shape& shape, const SweepMode& mode);
// The row A_{order, .} is constant. For unshifted straight shapes the
// hook product is reported alongside.
VerificationReport verify_constancy(const Shape& shape, const Filling& order,
                                    const MatrixOptions& options = {});

// Right-hand side of the fj decomposition through J_1, built from the
// elementary steps.
PairedState fj_via_first_step_down(const Filling& t, const Filling& s);

}  // namespace mjdt

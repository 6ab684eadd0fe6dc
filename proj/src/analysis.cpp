#include "mjdt/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "mjdt/text.hpp"

namespace mjdt {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

void check_exhaustive_cap(const Shape& shape, bool force_large) {
  if (shape.size() > kExhaustiveCap && !force_large) {
    throw Error(ErrorCode::TooLarge, shape.spec() + " has " + std::to_string(shape.size()) +
                                         " cells; exhaustive cap is " +
                                         std::to_string(kExhaustiveCap));
  }
}

// Permutation of 1..n with the given lexicographic rank.
std::vector<int> unrank_permutation(std::size_t n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t k = n; k > 0; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

bool entries_less(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t locate(std::span<const Filling> universe, std::span<const int> entries) {
  const auto it = std::lower_bound(
      universe.begin(), universe.end(), entries,
      [](const Filling& f, std::span<const int> key) { return entries_less(f.entries(), key); });
  return static_cast<std::size_t>(it - universe.begin());
}

// Adds, for each requested order tableau, the tally of MJ outputs over the
// permutations with lexicographic rank in [first, last).
void tally_range(const Shape& shape, std::span<const Filling> universe,
                 std::span<const std::size_t> rows, std::uint64_t first, std::uint64_t last,
                 std::vector<std::vector<std::uint64_t>>& counts) {
  const std::size_t n = shape.size();
  std::vector<std::vector<std::size_t>> orders;
  orders.reserve(rows.size());
  for (std::size_t p : rows) orders.push_back(detail::processing_order(universe[p]));

  std::vector<int> pi = unrank_permutation(n, first);
  std::vector<int> work(n);
  for (std::uint64_t rank = first; rank < last; ++rank) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Filling& order = universe[rows[r]];
      for (std::size_t idx = 0; idx < n; ++idx) {
        work[idx] = pi[static_cast<std::size_t>(order.at_index(idx) - 1)];
      }
      detail::modified_jdt_in_place(shape, work, orders[r]);
      ++counts[r][locate(universe, work)];
    }
    std::next_permutation(pi.begin(), pi.end());
  }
}

std::vector<std::vector<std::uint64_t>> tally(const Shape& shape,
                                              std::span<const Filling> universe,
                                              std::span<const std::size_t> rows,
                                              std::size_t workers) {
  const std::uint64_t total = factorial(shape.size());
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, total));
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  const Matrix zero(rows.size(), std::vector<std::uint64_t>(universe.size(), 0));
  std::vector<Matrix> partial(workers, zero);

  auto run = [&](std::size_t w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    tally_range(shape, universe, rows, first, last, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  Matrix out = zero;
  for (const Matrix& m : partial) {
    for (std::size_t r = 0; r < out.size(); ++r) {
      for (std::size_t q = 0; q < out[r].size(); ++q) out[r][q] += m[r][q];
    }
  }
  return out;
}

std::string permutation_text(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string case_text(const Filling& t, const Filling& s) {
  return "T:\n" + render_filling(t) + "S:\n" + render_filling(s);
}

// Visits (S, pi) cases: every standard S with every pi when exhaustive, or
// `samples` seeded random draws. `check` returns a counterexample description
// on failure. Tabloids are obtained as S_pi, which ranges over all fillings.
template <typename Check>
VerificationReport sweep(const std::string& property, const Shape& shape, const SweepMode& mode,
                         Check&& check) {
  VerificationReport report;
  report.property = property;
  report.shape = shape.spec();
  report.mode = mode;

  const std::size_t n = shape.size();
  if (mode.kind == SweepKind::Exhaustive) check_exhaustive_cap(shape, mode.force_large);
  const std::vector<Filling> universe = enumerate_standard(shape, mode.force_large);

  auto visit = [&](const Filling& s, const std::vector<int>& pi) {
    ++report.cases_checked;
    std::optional<std::string> failure = check(s, Permutation(pi));
    if (failure) {
      report.passed = false;
      report.counterexample = "pi: " + permutation_text(pi) + "\n" + *failure;
      return false;
    }
    return true;
  };

  std::vector<int> pi(n);
  if (mode.kind == SweepKind::Exhaustive) {
    for (const Filling& s : universe) {
      std::iota(pi.begin(), pi.end(), 1);
      do {
        if (!visit(s, pi)) return report;
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
    return report;
  }

  std::mt19937_64 rng(mode.seed);
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  for (std::uint64_t k = 0; k < mode.samples; ++k) {
    const Filling& s = universe[pick(rng)];
    std::iota(pi.begin(), pi.end(), 1);
    std::shuffle(pi.begin(), pi.end(), rng);
    if (!visit(s, pi)) return report;
  }
  return report;
}

bool is_bijective(std::span<const int> entries) {
  std::vector<int> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

}  // namespace

bool CountMatrix::is_symmetric() const {
  for (std::size_t p = 0; p < counts.size(); ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      if (counts[p][q] != counts[q][p]) return false;
    }
  }
  return true;
}

CountMatrix a_matrix(const Shape& shape, const MatrixOptions& options) {
  check_exhaustive_cap(shape, options.force_large);
  CountMatrix m{shape, enumerate_standard(shape, options.force_large), {}};
  std::vector<std::size_t> rows(m.tableaux.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  m.counts = tally(shape, m.tableaux, rows, options.workers);
  return m;
}

std::vector<std::uint64_t> a_row(const Shape& shape, const Filling& order,
                                 const MatrixOptions& options) {
  check_exhaustive_cap(shape, options.force_large);
  if (!(order.shape() == shape)) {
    throw Error(ErrorCode::ShapeMismatch, "order tableau has a different shape");
  }
  if (!is_standard(order)) throw Error(ErrorCode::NotStandard, "order tableau is not standard");
  const std::vector<Filling> universe = enumerate_standard(shape, options.force_large);
  const std::size_t row = lex_index(order, universe);
  return tally(shape, universe, std::span(&row, 1), options.workers).front();
}

VerificationReport verify_symmetry(const Shape& shape, const SweepMode& mode) {
  return sweep("symmetry", shape, mode,
               [](const Filling& p, const Permutation& pi) -> std::optional<std::string> {
                 const Filling q = modified_jdt(apply_permutation(p, pi), p);
                 const Filling back = modified_jdt(apply_permutation(q, inverse(pi)), q);
                 if (back == p) return std::nullopt;
                 return "P:\n" + render_filling(p) + "Q = MJ_P(P_pi):\n" + render_filling(q) +
                        "MJ_Q(Q_pi^-1):\n" + render_filling(back);
               });
}

VerificationReport verify_involution(const Shape& shape, const SweepMode& mode) {
  return sweep("involution", shape, mode,
               [](const Filling& s, const Permutation& pi) -> std::optional<std::string> {
                 const Filling t = apply_permutation(s, pi);
                 const PairedState once = fj(t, s);
                 const PairedState twice = fj(once.first, once.second);
                 if (twice == PairedState{t, s}) return std::nullopt;
                 return case_text(t, s) + "fj(fj(T,S)):\n" + render_pair(twice);
               });
}

VerificationReport verify_fj_eq_bj(const Shape& shape, const SweepMode& mode) {
  return sweep("fj-eq-bj", shape, mode,
               [](const Filling& s, const Permutation& pi) -> std::optional<std::string> {
                 const Filling t = apply_permutation(s, pi);
                 const PairedState forward = fj(t, s);
                 const PairedState backward = bj(t, s);
                 if (forward == backward) return std::nullopt;
                 return case_text(t, s) + "fj:\n" + render_pair(forward) + "bj:\n" +
                        render_pair(backward);
               });
}

PairedState fj_via_first_step_down(const Filling& t, const Filling& s) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return PairedState{s, t};
  const int k = s.at_index(t.index_of_entry(1));
  PairedState state = step_down(1, PairedState{t, s});
  for (int label = n; label >= 1; --label) {
    if (label != k) state = step_up(label, state);
  }
  return state.switched();
}

VerificationReport verify_identity_eq1(const Shape& shape, const SweepMode& mode) {
  return sweep("eq1", shape, mode,
               [](const Filling& s, const Permutation& pi) -> std::optional<std::string> {
                 const Filling t = apply_permutation(s, pi);
                 const PairedState lhs = fj(t, s);
                 const PairedState rhs = fj_via_first_step_down(t, s);
                 if (lhs == rhs) return std::nullopt;
                 return case_text(t, s) + "fj:\n" + render_pair(lhs) + "decomposition:\n" +
                        render_pair(rhs);
               });
}

VerificationReport verify_pi_tracking(const Shape& shape, const SweepMode& mode) {
  return sweep("pi-tracking", shape, mode,
               [](const Filling& p, const Permutation& pi) -> std::optional<std::string> {
                 std::optional<std::string> failure;
                 PairObserver observer;
                 observer.after_move = [&](const PairedState& st) {
                   if (!failure && !(st.first == apply_permutation(st.second, pi))) {
                     failure = "intermediate pair:\n" + render_pair(st);
                   }
                 };
                 fj(apply_permutation(p, pi), p, observer);
                 return failure;
               });
}

VerificationReport verify_paths(const Shape& shape, const SweepMode& mode) {
  return sweep(
      "paths", shape, mode,
      [](const Filling& s, const Permutation& pi) -> std::optional<std::string> {
        const Filling t = apply_permutation(s, pi);
        const int n = static_cast<int>(t.size());

        // Forward half: modified jdt step by step with explicit transcripts.
        PairedState state{t, s};
        for (int label = n; label >= 1; --label) {
          const JdtResult r = forward_jdt(state.first, state.second.cell_of(label));
          for (const Move& m : r.transcript) {
            const bool right = m.to.row == m.from.row && m.to.col == m.from.col + 1;
            const bool down = m.to.col == m.from.col && m.to.row == m.from.row + 1;
            if (!right && !down) {
              return case_text(t, s) + "forward move " + to_string(m.from) + "->" +
                     to_string(m.to) + "\n";
            }
          }
          if (!is_bijective(r.filling.entries())) return case_text(t, s) + "entries lost\n";
          state = {r.filling, replay(state.second, r.transcript)};
        }
        if (!is_standard(state.first)) {
          return case_text(t, s) + "MJ_S(T) not standard:\n" + render_filling(state.first);
        }
        if (!(state.first == modified_jdt(t, s))) {
          return case_text(t, s) + "stepwise result differs from modified_jdt\n";
        }

        // Backward half: undo it with explicit masked backward slides.
        state = state.switched();
        for (int label = 1; label <= n; ++label) {
          const Filling& labels = state.first;
          const Mask mask = restrict_mask(full_mask(labels.shape()), [&](Cell c) {
            return labels.at(c) >= label;
          });
          const JdtResult r = backward_jdt(state.second, labels.cell_of(label), mask);
          for (const Move& m : r.transcript) {
            const bool left = m.to.row == m.from.row && m.to.col == m.from.col - 1;
            const bool up = m.to.col == m.from.col && m.to.row == m.from.row - 1;
            if (!left && !up) {
              return case_text(t, s) + "backward move " + to_string(m.from) + "->" +
                     to_string(m.to) + "\n";
            }
          }
          if (!is_bijective(r.filling.entries())) return case_text(t, s) + "entries lost\n";
          state = {replay(state.first, r.transcript), r.filling};
        }
        if (!(state == PairedState{s, t})) {
          return case_text(t, s) + "backward slides did not restore the pair:\n" +
                 render_pair(state);
        }
        return std::nullopt;
      });
}

VerificationReport verify_constancy(const Shape& shape, const Filling& order,
                                    const MatrixOptions& options) {
  VerificationReport report;
  report.property = "constancy";
  report.shape = shape.spec();
  report.mode = SweepMode::exhaustive(options.force_large);

  const std::vector<std::uint64_t> row = a_row(shape, order, options);
  report.cases_checked = factorial(shape.size());
  report.common_value = row.front();
  const auto odd = std::find_if(row.begin(), row.end(),
                                [&](std::uint64_t v) { return v != row.front(); });
  if (odd != row.end()) {
    report.passed = false;
    report.common_value.reset();
    const std::vector<Filling> universe = enumerate_standard(shape, options.force_large);
    const auto q = static_cast<std::size_t>(odd - row.begin());
    report.counterexample = "order:\n" + render_filling(order) + "A[order][0] = " +
                            std::to_string(row.front()) + " but A[order][" + std::to_string(q) +
                            "] = " + std::to_string(*odd) + " for Q:\n" +
                            render_filling(universe[q]);
  }
  if (!shape.shifted() && shape.is_straight()) report.hook_product = hook_product(shape);
  return report;
}

}  // namespace mjdt

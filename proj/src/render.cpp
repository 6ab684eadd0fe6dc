#include "mjdt/render.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace mjdt {

namespace {

constexpr std::size_t kMaxDigits = 9;

std::string word_text(const Filling& f, char sep) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(f.at_index(i));
  }
  return out;
}

}  // namespace

DigitLegend DigitLegend::from(const CountMatrix& m) {
  std::set<std::uint64_t> distinct;
  for (const auto& row : m.counts) distinct.insert(row.begin(), row.end());
  if (distinct.size() > kMaxDigits) {
    throw Error(ErrorCode::TooManyValues, "matrix has " + std::to_string(distinct.size()) +
                                              " distinct values; digit rendering allows " +
                                              std::to_string(kMaxDigits));
  }
  return {std::vector<std::uint64_t>(distinct.begin(), distinct.end())};
}

char DigitLegend::digit(std::uint64_t value) const {
  const auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) {
    throw Error(ErrorCode::NotFound, "value " + std::to_string(value) + " not in legend");
  }
  return static_cast<char>('1' + (it - values.begin()));
}

std::string render_digit_rows(const CountMatrix& m) {
  const DigitLegend legend = DigitLegend::from(m);
  std::string out;
  for (const auto& row : m.counts) {
    for (std::uint64_t v : row) out += legend.digit(v);
    out += '\n';
  }
  return out;
}

std::string render_digit_matrix(const CountMatrix& m) {
  const DigitLegend legend = DigitLegend::from(m);
  std::string out = render_digit_rows(m);
  out += '\n';
  for (std::uint64_t v : legend.values) {
    out += legend.digit(v);
    out += " -> " + std::to_string(v) + '\n';
  }
  return out;
}

std::string matrix_to_json(const CountMatrix& m) {
  nlohmann::json j;
  j["shape"] = m.shape.spec();
  j["order"] = "lex-reading-word";
  j["tableaux"] = nlohmann::json::array();
  for (const Filling& t : m.tableaux) {
    j["tableaux"].push_back(std::vector<int>(t.entries().begin(), t.entries().end()));
  }
  j["matrix"] = m.counts;
  return j.dump() + '\n';
}

std::string matrix_to_csv(const CountMatrix& m) {
  std::string out = "P\\Q";
  for (const Filling& t : m.tableaux) out += "," + word_text(t, ' ');
  out += '\n';
  for (std::size_t p = 0; p < m.counts.size(); ++p) {
    out += word_text(m.tableaux[p], ' ');
    for (std::uint64_t v : m.counts[p]) out += "," + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string report_to_text(const VerificationReport& r) {
  std::string out;
  out += "property: " + r.property + '\n';
  out += "shape: " + r.shape + '\n';
  if (r.mode.kind == SweepKind::Exhaustive) {
    out += "mode: exhaustive\n";
  } else {
    out += "mode: sampled seed=" + std::to_string(r.mode.seed) +
           " samples=" + std::to_string(r.mode.samples) + '\n';
  }
  out += "cases: " + std::to_string(r.cases_checked) + '\n';
  if (r.common_value) out += "common value: " + std::to_string(*r.common_value) + '\n';
  if (r.hook_product) out += "hook product: " + std::to_string(*r.hook_product) + '\n';
  out += std::string("result: ") + (r.passed ? "PASS" : "FAIL") + '\n';
  if (r.counterexample) out += "counterexample:\n" + *r.counterexample;
  return out;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["property"] = r.property;
  j["shape"] = r.shape;
  j["mode"] = r.mode.kind == SweepKind::Exhaustive ? "exhaustive" : "sampled";
  if (r.mode.kind == SweepKind::Sampled) {
    j["seed"] = r.mode.seed;
    j["samples"] = r.mode.samples;
  }
  j["cases"] = r.cases_checked;
  j["passed"] = r.passed;
  j["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nullptr;
  if (r.common_value) j["common_value"] = *r.common_value;
  if (r.hook_product) j["hook_product"] = *r.hook_product;
  return j.dump() + '\n';
}

}  // namespace mjdt

#include "mjdt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mjdt/analysis.hpp"
#include "mjdt/render.hpp"
#include "mjdt/text.hpp"

namespace mjdt {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Filling load_filling(const std::string& path, const Shape& shape) {
  return parse_filling(read_file(path), shape);
}

// `--order` takes a file or one of the canonical keywords.
Filling load_order(const std::string& arg, const Shape& shape) {
  if (arg == "nps-column") return canonical_order(shape, CanonicalOrder::NpsColumn);
  if (arg == "rowwise-bottomup-rl") {
    return canonical_order(shape, CanonicalOrder::RowwiseBottomUpRightLeft);
  }
  return load_filling(arg, shape);
}

std::size_t default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

struct Options {
  std::string shape;
  std::string tabloid;
  std::string order;
  std::string first;
  std::string second;
  std::string property;
  std::string format;
  bool trace = false;
  bool exhaustive = false;
  bool force_large = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
};

int cmd_shape_validate(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape_spec(o.shape);
  out << "shape: " << shape.spec() << '\n';
  out << "size: " << shape.size() << '\n';
  out << "cells:";
  for (const Cell& c : shape.cells()) out << ' ' << to_string(c);
  out << '\n';
  return kExitOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape_spec(o.shape);
  const auto all = enumerate_standard(shape, o.force_large);
  out << "# count: " << all.size() << '\n';
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (o.format == "words") {
      const Permutation word = reading_word(all[k]);
      const auto& w = word.word();
      for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
      out << '\n';
    } else {
      out << "# " << k << '\n' << render_filling(all[k]);
    }
  }
  return kExitOk;
}

int cmd_mj(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape_spec(o.shape);
  const Filling t = load_filling(o.tabloid, shape);
  const Filling s = load_order(o.order, shape);
  MjObserver observer;
  if (o.trace) {
    observer = [&](int label, const Filling& current, bool moved) {
      if (moved) out << "# after label " << label << '\n' << render_filling(current);
    };
  }
  const Filling result = modified_jdt(t, s, observer);
  out << "# result\n" << render_filling(result);
  return kExitOk;
}

PairObserver pair_tracer(bool enabled, std::ostream& out) {
  PairObserver observer;
  if (enabled) {
    observer.after_step = [&out](int label, const PairedState& st, bool moved) {
      if (moved) out << "# after label " << label << '\n' << render_pair(st);
    };
  }
  return observer;
}

int cmd_fj(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape_spec(o.shape);
  const Filling t = load_filling(o.tabloid, shape);
  const Filling s = load_order(o.order, shape);
  const PairedState result = fj(t, s, pair_tracer(o.trace, out));
  out << "# result\n" << render_pair(result);
  return kExitOk;
}

int cmd_bj(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape_spec(o.shape);
  const Filling first = load_filling(o.first, shape);
  const Filling second = load_order(o.second, shape);
  const PairedState result = bj(first, second, pair_tracer(o.trace, out));
  out << "# result\n" << render_pair(result);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Shape shape = parse_shape_spec(o.shape);
  const MatrixOptions matrix{o.workers ? o.workers : default_workers(), o.force_large};

  VerificationReport report;
  if (o.property == "constancy") {
    if (o.order.empty()) {
      err << "verify constancy needs --order\n";
      return kExitInvalid;
    }
    report = verify_constancy(shape, load_order(o.order, shape), matrix);
  } else {
    SweepMode mode;
    if (o.exhaustive == (o.samples > 0)) {
      err << "choose exactly one of --exhaustive or --samples N\n";
      return kExitInvalid;
    }
    if (o.exhaustive) {
      mode = SweepMode::exhaustive(o.force_large);
    } else {
      mode = SweepMode::sampled(o.seed, o.samples);
    }
    if (o.property == "symmetry") {
      report = verify_symmetry(shape, mode);
    } else if (o.property == "involution") {
      report = verify_involution(shape, mode);
    } else if (o.property == "fj-eq-bj") {
      report = verify_fj_eq_bj(shape, mode);
    } else if (o.property == "eq1") {
      report = verify_identity_eq1(shape, mode);
    } else if (o.property == "pi-tracking") {
      report = verify_pi_tracking(shape, mode);
    } else {
      report = verify_paths(shape, mode);
    }
  }
  out << (o.format == "json" ? report_to_json(report) : report_to_text(report));
  return report.passed ? kExitOk : kExitFalsified;
}

int cmd_amatrix(const Options& o, std::ostream& out) {
  const Shape shape = parse_shape_spec(o.shape);
  const MatrixOptions matrix{o.workers ? o.workers : default_workers(), o.force_large};
  const CountMatrix m = a_matrix(shape, matrix);
  if (o.format == "json") {
    out << matrix_to_json(m);
  } else if (o.format == "csv") {
    out << matrix_to_csv(m);
  } else {
    out << render_digit_matrix(m);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modified jeu de taquin toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--shape", o.shape, "OUTER[/INNER][:shifted]")->required();
  };

  auto* validate = app.add_subcommand("shape-validate", "Validate a shape spec and list its cells");
  add_shape(validate);

  auto* tableaux = app.add_subcommand("tableaux", "List standard tableaux in reading-word order");
  add_shape(tableaux);
  tableaux->add_flag("--force-large", o.force_large, "Lift the enumeration cap");
  tableaux->add_option("--format", o.format, "grid or words")
      ->check(CLI::IsMember({"grid", "words"}));

  auto* mj = app.add_subcommand("mj", "Run modified jeu de taquin");
  add_shape(mj);
  mj->add_option("--tabloid", o.tabloid, "Filling file")->required();
  mj->add_option("--order", o.order, "Order tableau file, nps-column or rowwise-bottomup-rl")
      ->required();
  mj->add_flag("--trace", o.trace, "Print every intermediate filling");

  auto* fj_cmd = app.add_subcommand("fj", "Run the paired forward operation on (tabloid, order)");
  add_shape(fj_cmd);
  fj_cmd->add_option("--tabloid", o.tabloid, "Filling file")->required();
  fj_cmd->add_option("--order", o.order, "Standard filling file or keyword")->required();
  fj_cmd->add_flag("--trace", o.trace, "Print every intermediate pair");

  auto* bj_cmd = app.add_subcommand("bj", "Run the paired backward operation on (first, second)");
  add_shape(bj_cmd);
  bj_cmd->add_option("--first", o.first, "Filling file")->required();
  bj_cmd->add_option("--second", o.second, "Standard filling file or keyword")->required();
  bj_cmd->add_flag("--trace", o.trace, "Print every intermediate pair");

  auto* verify = app.add_subcommand("verify", "Check a property and print a report");
  verify
      ->add_option("property", o.property,
                   "symmetry, involution, fj-eq-bj, eq1, pi-tracking, paths or constancy")
      ->required()
      ->check(CLI::IsMember(
          {"symmetry", "involution", "fj-eq-bj", "eq1", "pi-tracking", "paths", "constancy"}));
  add_shape(verify);
  verify->add_flag("--exhaustive", o.exhaustive, "Sweep every case");
  auto* samples = verify->add_option("--samples", o.samples, "Number of random cases");
  auto* seed = verify->add_option("--seed", o.seed, "Random seed");
  samples->needs(seed);
  verify->add_option("--order", o.order, "Order tableau for constancy");
  verify->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--workers", o.workers, "Worker threads for constancy");
  verify->add_flag("--force-large", o.force_large, "Lift the exhaustive cap");

  auto* amatrix = app.add_subcommand("amatrix", "Compute the A(P,Q) count matrix");
  add_shape(amatrix);
  amatrix->add_option("--format", o.format, "json, csv or digits")
      ->check(CLI::IsMember({"json", "csv", "digits"}));
  amatrix->add_option("--workers", o.workers, "Worker threads");
  amatrix->add_flag("--force-large", o.force_large, "Lift the exhaustive cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (validate->parsed()) return cmd_shape_validate(o, out);
    if (tableaux->parsed()) return cmd_tableaux(o, out);
    if (mj->parsed()) return cmd_mj(o, out);
    if (fj_cmd->parsed()) return cmd_fj(o, out);
    if (bj_cmd->parsed()) return cmd_bj(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (amatrix->parsed()) return cmd_amatrix(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace mjdt

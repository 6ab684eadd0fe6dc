#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mjdt/analysis.hpp"
#include "mjdt/render.hpp"
#include "mjdt/text.hpp"

namespace py = pybind11;
using namespace mjdt;

namespace {

using CellTuple = std::pair<int, int>;

Cell to_cell(const CellTuple& c) { return {c.first, c.second}; }
CellTuple from_cell(const Cell& c) { return {c.row, c.col}; }

std::vector<std::pair<CellTuple, CellTuple>> transcript_tuples(const Transcript& t) {
  std::vector<std::pair<CellTuple, CellTuple>> out;
  for (const Move& m : t) out.emplace_back(from_cell(m.from), from_cell(m.to));
  return out;
}

CanonicalOrder order_kind(const std::string& name) {
  if (name == "nps-column") return CanonicalOrder::NpsColumn;
  if (name == "rowwise-bottomup-rl") return CanonicalOrder::RowwiseBottomUpRightLeft;
  throw Error(ErrorCode::ParseError, "unknown order '" + name + "'");
}

SweepMode sweep_mode(std::optional<std::uint64_t> seed, std::optional<std::uint64_t> samples) {
  if (samples) {
    if (!seed) throw Error(ErrorCode::ParseError, "sampled verification needs a seed");
    return SweepMode::sampled(*seed, *samples);
  }
  return SweepMode::exhaustive();
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["property"] = r.property;
  d["shape"] = r.shape;
  d["mode"] = r.mode.kind == SweepKind::Exhaustive ? "exhaustive" : "sampled";
  if (r.mode.kind == SweepKind::Sampled) {
    d["seed"] = r.mode.seed;
    d["samples"] = r.mode.samples;
  }
  d["cases"] = r.cases_checked;
  d["passed"] = r.passed;
  d["counterexample"] = r.counterexample;
  d["common_value"] = r.common_value;
  d["hook_product"] = r.hook_product;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Modified jeu de taquin on unshifted and shifted skew shapes";

  py::register_exception<Error>(m, "MjdtError", PyExc_ValueError);

  py::class_<Shape>(m, "Shape")
      .def(py::init([](std::vector<int> outer, std::vector<int> inner, bool shifted) {
             return make_shape(std::move(outer), std::move(inner), shifted);
           }),
           py::arg("outer"), py::arg("inner") = std::vector<int>{}, py::arg("shifted") = false)
      .def_static("parse", [](const std::string& spec) { return parse_shape_spec(spec); })
      .def_property_readonly("outer", &Shape::outer)
      .def_property_readonly("inner", &Shape::inner)
      .def_property_readonly("shifted", &Shape::shifted)
      .def_property_readonly("size", &Shape::size)
      .def_property_readonly("spec", &Shape::spec)
      .def("cells", [](const Shape& s) {
        std::vector<CellTuple> out;
        for (const Cell& c : s.cells()) out.push_back(from_cell(c));
        return out;
      })
      .def("contains", [](const Shape& s, CellTuple c) { return s.contains(to_cell(c)); })
      .def("neighbor",
           [](const Shape& s, CellTuple c, const std::string& dir) -> std::optional<CellTuple> {
             Direction d;
             if (dir == "right") d = Direction::Right;
             else if (dir == "below") d = Direction::Below;
             else if (dir == "left") d = Direction::Left;
             else if (dir == "above") d = Direction::Above;
             else throw Error(ErrorCode::ParseError, "unknown direction '" + dir + "'");
             const auto n = s.neighbor(to_cell(c), d);
             if (!n) return std::nullopt;
             return from_cell(*n);
           })
      .def("__eq__", [](const Shape& a, const Shape& b) { return a == b; })
      .def("__repr__", [](const Shape& s) { return "Shape('" + s.spec() + "')"; });

  py::class_<Filling>(m, "Filling")
      .def(py::init<Shape, std::vector<int>>(), py::arg("shape"), py::arg("entries"))
      .def_static("from_text",
                  [](const std::string& text, const Shape& shape) {
                    return parse_filling(text, shape);
                  })
      .def("to_text", &render_filling)
      .def_property_readonly("shape", &Filling::shape)
      .def_property_readonly("entries", [](const Filling& f) {
        return std::vector<int>(f.entries().begin(), f.entries().end());
      })
      .def("at", [](const Filling& f, CellTuple c) { return f.at(to_cell(c)); })
      .def("is_standard", &is_standard)
      .def("reading_word", [](const Filling& f) { return reading_word(f).word(); })
      .def("__eq__", [](const Filling& a, const Filling& b) { return a == b; })
      .def("__repr__", [](const Filling& f) { return "Filling(\n" + render_filling(f) + ")"; });

  m.def("enumerate_standard", &enumerate_standard, py::arg("shape"),
        py::arg("force_large") = false);
  m.def("apply_permutation", [](const Filling& f, std::vector<int> word) {
    return apply_permutation(f, Permutation(std::move(word)));
  });
  m.def("inverse", [](std::vector<int> word) { return inverse(Permutation(std::move(word))).word(); });
  m.def("canonical_order", [](const Shape& s, const std::string& kind) {
    return canonical_order(s, order_kind(kind));
  });
  m.def("hook_product", &hook_product);

  m.def("forward_jdt", [](const Filling& f, CellTuple start) {
    const JdtResult r = forward_jdt(f, to_cell(start));
    return py::make_tuple(r.filling, transcript_tuples(r.transcript));
  });
  m.def(
      "backward_jdt",
      [](const Filling& f, CellTuple start, std::optional<std::vector<CellTuple>> mask_cells) {
        Mask mask = full_mask(f.shape());
        if (mask_cells) {
          std::vector<bool> included(f.shape().size(), false);
          for (const auto& c : *mask_cells) included[f.shape().require_index(to_cell(c))] = true;
          mask = Mask(f.shape(), std::move(included));
        }
        const JdtResult r = backward_jdt(f, to_cell(start), mask);
        return py::make_tuple(r.filling, transcript_tuples(r.transcript));
      },
      py::arg("filling"), py::arg("start"), py::arg("mask") = std::nullopt);
  m.def("modified_jdt", [](const Filling& t, const Filling& s) { return modified_jdt(t, s); });
  m.def("fj", [](const Filling& t, const Filling& s) {
    const PairedState st = fj(t, s);
    return py::make_tuple(st.first, st.second);
  });
  m.def("bj", [](const Filling& a, const Filling& b) {
    const PairedState st = bj(a, b);
    return py::make_tuple(st.first, st.second);
  });

  py::class_<CountMatrix>(m, "CountMatrix")
      .def_readonly("shape", &CountMatrix::shape)
      .def_readonly("tableaux", &CountMatrix::tableaux)
      .def_readonly("counts", &CountMatrix::counts)
      .def("is_symmetric", &CountMatrix::is_symmetric)
      .def("to_digits", &render_digit_matrix)
      .def("to_json", &matrix_to_json)
      .def("to_csv", &matrix_to_csv);

  m.def(
      "a_matrix",
      [](const Shape& s, std::size_t workers, bool force_large) {
        py::gil_scoped_release release;
        return a_matrix(s, {workers, force_large});
      },
      py::arg("shape"), py::arg("workers") = 1, py::arg("force_large") = false);

  m.def(
      "verify",
      [](const std::string& property, const Shape& s, std::optional<std::uint64_t> seed,
         std::optional<std::uint64_t> samples) {
        const SweepMode mode = sweep_mode(seed, samples);
        VerificationReport r;
        if (property == "symmetry") r = verify_symmetry(s, mode);
        else if (property == "involution") r = verify_involution(s, mode);
        else if (property == "fj-eq-bj") r = verify_fj_eq_bj(s, mode);
        else if (property == "eq1") r = verify_identity_eq1(s, mode);
        else if (property == "pi-tracking") r = verify_pi_tracking(s, mode);
        else if (property == "paths") r = verify_paths(s, mode);
        else throw Error(ErrorCode::ParseError, "unknown property '" + property + "'");
        return report_dict(r);
      },
      py::arg("property"), py::arg("shape"), py::arg("seed") = std::nullopt,
      py::arg("samples") = std::nullopt);

  m.def(
      "verify_constancy",
      [](const Shape& s, const Filling& order, std::size_t workers) {
        return report_dict(verify_constancy(s, order, {workers, false}));
      },
      py::arg("shape"), py::arg("order"), py::arg("workers") = 1);
}

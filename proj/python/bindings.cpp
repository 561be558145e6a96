#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <utility>

#include "gsfs/branched_cover.hpp"
#include "gsfs/enumerator.hpp"
#include "gsfs/errors.hpp"
#include "gsfs/invariants.hpp"
#include "gsfs/local_action.hpp"
#include "gsfs/notation.hpp"

namespace py = pybind11;
using namespace gsfs;

namespace {

using PairList = std::vector<std::pair<std::int64_t, std::int64_t>>;

PairList to_tuples(const std::vector<SeifertPair>& pairs) {
  PairList out;
  for (const auto& p : pairs) out.emplace_back(p.alpha, p.beta);
  return out;
}

std::vector<SeifertPair> from_tuples(const PairList& pairs) {
  std::vector<SeifertPair> out;
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

Epsilon epsilon_arg(const py::object& value) {
  if (py::isinstance<Epsilon>(value)) return value.cast<Epsilon>();
  const auto tag = value.cast<std::string>();
  if (auto e = epsilon_from_string(tag)) return *e;
  throw py::value_error("unknown eps tag '" + tag + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized Seifert fiber space symbols";

  auto base = py::register_exception<Error>(m, "GsfsError");
  auto parse_error = py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", parse_error.ptr());
  py::register_exception<InvalidSymbol>(m, "InvalidSymbol", base.ptr());
  py::register_exception<NotBranched>(m, "NotBranched", base.ptr());
  py::register_exception<NotInImage>(m, "NotInImage", base.ptr());
  py::register_exception<BoundsError>(m, "BoundsError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());

  py::enum_<Epsilon>(m, "Epsilon")
      .value("o1", Epsilon::o1)
      .value("o2", Epsilon::o2)
      .value("n1", Epsilon::n1)
      .value("n2", Epsilon::n2)
      .value("n3", Epsilon::n3)
      .value("n4", Epsilon::n4)
      .def_property_readonly("orientable_base", [](Epsilon e) { return is_orientable_base(e); })
      .def_property_readonly("z2_obstruction", [](Epsilon e) { return has_z2_obstruction(e); });

  py::enum_<Rule>(m, "Rule")
      .value("NegativeCount", Rule::NegativeCount)
      .value("AlphaNonPositive", Rule::AlphaNonPositive)
      .value("NotCoprime", Rule::NotCoprime)
      .value("NonOrientableGenusZero", Rule::NonOrientableGenusZero)
      .value("ObstructionWithIntervalFibers", Rule::ObstructionWithIntervalFibers)
      .value("ObstructionWithAlphaTwo", Rule::ObstructionWithAlphaTwo)
      .value("ObstructionOutsideZ2", Rule::ObstructionOutsideZ2)
      .value("TwistedFixedExceedsFixed", Rule::TwistedFixedExceedsFixed)
      .value("TwistedSeExceedsSe", Rule::TwistedSeExceedsSe)
      .value("TwistedSfExceedsSf", Rule::TwistedSfExceedsSf)
      .value("SimpleSfTupleLength", Rule::SimpleSfTupleLength)
      .value("TwistedSfTupleLength", Rule::TwistedSfTupleLength)
      .value("OddSingularCount", Rule::OddSingularCount)
      .value("ObstructionWithFixedBlocks", Rule::ObstructionWithFixedBlocks)
      .value("CoverInadmissible", Rule::CoverInadmissible)
      .value("CoverEpsilon", Rule::CoverEpsilon)
      .value("CoverGenus", Rule::CoverGenus)
      .value("CoverObstruction", Rule::CoverObstruction)
      .value("CoverPairs", Rule::CoverPairs)
      .value("CoverSingular", Rule::CoverSingular);

  py::class_<Violation>(m, "Violation")
      .def_readonly("rule", &Violation::rule)
      .def_readonly("field", &Violation::field)
      .def_readonly("message", &Violation::message)
      .def("__repr__", [](const Violation& v) { return "<Violation " + v.message + ">"; });

  py::class_<GsfsSymbol>(m, "GsfsSymbol")
      .def(py::init([](std::int64_t b, const py::object& eps, std::int64_t g, std::int64_t iota,
                       const PairList& pairs) {
             return GsfsSymbol{b, epsilon_arg(eps), g, iota, from_tuples(pairs)};
           }),
           py::arg("b") = 0, py::arg("eps") = "o1", py::arg("g") = 0, py::arg("iota") = 0,
           py::arg("pairs") = PairList{})
      .def_readwrite("b", &GsfsSymbol::obstruction)
      .def_readwrite("eps", &GsfsSymbol::epsilon)
      .def_readwrite("g", &GsfsSymbol::genus)
      .def_readwrite("iota", &GsfsSymbol::interval_fibers)
      .def_property(
          "pairs", [](const GsfsSymbol& s) { return to_tuples(s.pairs); },
          [](GsfsSymbol& s, const PairList& p) { s.pairs = from_tuples(p); })
      .def(py::self == py::self)
      .def("__hash__", [](const GsfsSymbol& s) { return py::hash(py::str(render_gsfs(s))); })
      .def("__str__", &render_gsfs)
      .def("__repr__", [](const GsfsSymbol& s) { return "<" + render_gsfs(s) + ">"; });

  py::class_<LocalActionSymbol>(m, "LocalActionSymbol")
      .def(py::init([](std::int64_t b, const py::object& eps, std::int64_t g,
                       std::pair<std::int64_t, std::int64_t> f,
                       std::pair<std::int64_t, std::int64_t> t,
                       std::pair<std::int64_t, std::int64_t> s, const PairList& pairs,
                       std::vector<std::int64_t> r, std::vector<std::int64_t> q) {
             LocalActionSymbol out;
             out.obstruction = b;
             out.epsilon = epsilon_arg(eps);
             out.genus = g;
             std::tie(out.fixed_blocks, out.twisted_fixed_blocks) = f;
             std::tie(out.se_blocks, out.twisted_se_blocks) = t;
             std::tie(out.sf_blocks, out.twisted_sf_blocks) = s;
             out.pairs = from_tuples(pairs);
             out.simple_sf_singular = std::move(r);
             out.twisted_sf_singular = std::move(q);
             return out;
           }),
           py::arg("b") = 0, py::arg("eps") = "o1", py::arg("g") = 0,
           py::arg("f") = std::pair<std::int64_t, std::int64_t>{0, 0},
           py::arg("t") = std::pair<std::int64_t, std::int64_t>{0, 0},
           py::arg("s") = std::pair<std::int64_t, std::int64_t>{0, 0},
           py::arg("pairs") = PairList{}, py::arg("r") = std::vector<std::int64_t>{},
           py::arg("q") = std::vector<std::int64_t>{})
      .def_readwrite("b", &LocalActionSymbol::obstruction)
      .def_readwrite("eps", &LocalActionSymbol::epsilon)
      .def_readwrite("g", &LocalActionSymbol::genus)
      .def_readwrite("f", &LocalActionSymbol::fixed_blocks)
      .def_readwrite("k1", &LocalActionSymbol::twisted_fixed_blocks)
      .def_readwrite("t", &LocalActionSymbol::se_blocks)
      .def_readwrite("k2", &LocalActionSymbol::twisted_se_blocks)
      .def_readwrite("s", &LocalActionSymbol::sf_blocks)
      .def_readwrite("k3", &LocalActionSymbol::twisted_sf_blocks)
      .def_readwrite("r", &LocalActionSymbol::simple_sf_singular)
      .def_readwrite("q", &LocalActionSymbol::twisted_sf_singular)
      .def_property_readonly("k", &LocalActionSymbol::twisted_total)
      .def_property(
          "pairs", [](const LocalActionSymbol& s) { return to_tuples(s.pairs); },
          [](LocalActionSymbol& s, const PairList& p) { s.pairs = from_tuples(p); })
      .def(py::self == py::self)
      .def("__str__", &render_local)
      .def("__repr__", [](const LocalActionSymbol& s) { return "<" + render_local(s) + ">"; });

  py::class_<EnumBounds>(m, "EnumBounds")
      .def(py::init([](std::int64_t max_g, std::int64_t max_iota, std::int64_t max_pairs,
                       std::int64_t max_alpha, std::pair<std::int64_t, std::int64_t> b_range,
                       const std::vector<py::object>& eps) {
             EnumBounds out{max_g, max_iota, max_pairs, max_alpha, b_range.first, b_range.second, {}};
             if (eps.empty()) {
               out.epsilons.assign(kAllEpsilons.begin(), kAllEpsilons.end());
             }
             for (const auto& e : eps) out.epsilons.push_back(epsilon_arg(e));
             return checked_bounds(out);
           }),
           py::arg("max_g") = 0, py::arg("max_iota") = 0, py::arg("max_pairs") = 0,
           py::arg("max_alpha") = 2,
           py::arg("b_range") = std::pair<std::int64_t, std::int64_t>{0, 0},
           py::arg("eps") = std::vector<py::object>{})
      .def_readonly("max_g", &EnumBounds::max_genus)
      .def_readonly("max_iota", &EnumBounds::max_interval_fibers)
      .def_readonly("max_pairs", &EnumBounds::max_pairs)
      .def_readonly("max_alpha", &EnumBounds::max_alpha)
      .def_property_readonly("b_range",
                             [](const EnumBounds& b) { return std::make_pair(b.b_min, b.b_max); })
      .def_readonly("eps", &EnumBounds::epsilons)
      .def(py::self == py::self)
      .def("__str__", &render_bounds);

  py::class_<CensusRecord>(m, "CensusRecord")
      .def_readonly("symbol", &CensusRecord::symbol)
      .def_readonly("sing", &CensusRecord::sing)
      .def_readonly("manifold", &CensusRecord::manifold)
      .def_readonly("cover", &CensusRecord::cover)
      .def(py::self == py::self);

  m.def("parse_gsfs", &parse_gsfs, py::arg("text"));
  m.def("render_gsfs", &render_gsfs, py::arg("symbol"));
  m.def("parse_local", &parse_local, py::arg("text"));
  m.def("render_local", &render_local, py::arg("symbol"));

  m.def("validate_gsfs", &validate_gsfs, py::arg("symbol"));
  m.def("normalize_gsfs", &normalize_gsfs, py::arg("symbol"));
  m.def("is_normalized", &is_normalized, py::arg("symbol"));
  m.def("reverse_orientation", &reverse_orientation, py::arg("symbol"));
  m.def(
      "equivalent",
      [](const GsfsSymbol& a, const GsfsSymbol& b, bool up_to_orientation) {
        return equivalent(a, b,
                          up_to_orientation ? OrientationPolicy::UpToOrientation
                                            : OrientationPolicy::Strict);
      },
      py::arg("a"), py::arg("b"), py::arg("up_to_orientation") = false);
  m.def("sing_count", [](const GsfsSymbol& s) { return sing_count(s); }, py::arg("symbol"));
  m.def("is_manifold", [](const GsfsSymbol& s) { return is_manifold(s); }, py::arg("symbol"));

  m.def("validate_local", &validate_local, py::arg("symbol"));
  m.def("normalize_local", &normalize_local, py::arg("symbol"));
  m.def("equivalent_local", &equivalent_local, py::arg("a"), py::arg("b"));
  m.def("to_local_action", &to_local_action, py::arg("symbol"));
  m.def("from_local_action", &from_local_action, py::arg("symbol"));
  m.def("local_sing_count", &local_sing_count, py::arg("symbol"));

  m.def("double_cover", &double_cover, py::arg("symbol"));
  m.def(
      "check_cover_consistency",
      [](const GsfsSymbol& s, const std::optional<CoverFunction>& cover) {
        return check_cover_consistency(s, cover ? *cover : CoverFunction(double_cover));
      },
      py::arg("symbol"), py::arg("cover") = py::none());

  m.def("enumerate", &enumerate, py::arg("bounds"));
  m.def(
      "build_census", [](const EnumBounds& b) { return build_census(b).records; },
      py::arg("bounds"));
  m.def(
      "census_text",
      [](const EnumBounds& b) {
        std::ostringstream out;
        write_census(build_census(b), out);
        return out.str();
      },
      py::arg("bounds"));
  m.def(
      "write_census",
      [](const EnumBounds& b, const std::filesystem::path& path) {
        const Census c = build_census(b);
        write_census(c, path);
        return c.records.size();
      },
      py::arg("bounds"), py::arg("path"));
  m.def(
      "read_census",
      [](const std::filesystem::path& path) {
        Census c = read_census(path);
        return std::make_pair(c.bounds, c.records);
      },
      py::arg("path"));
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "txyz/counting.hpp"
#include "txyz/relations.hpp"
#include "txyz/semigroup.hpp"
#include "txyz/structure.hpp"
#include "txyz/verify.hpp"

namespace py = pybind11;

namespace {

// Counts cross the boundary as native Python ints, never floats.
py::int_ to_py_int(const txyz::Count& c) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(c.get_str().c_str(), nullptr, 10));
}

std::vector<txyz::Transformation> collect(txyz::ElementStream stream,
                                          std::size_t limit) {
  std::vector<txyz::Transformation> out;
  while (out.size() < limit) {
    auto t = stream.next();
    if (!t) return out;
    out.push_back(std::move(*t));
  }
  if (stream.next()) {
    throw txyz::EnumerationLimitError("enumeration exceeds limit of " +
                                      std::to_string(limit));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(txyz, m) {
  using namespace txyz;

  m.doc() = "transformation semigroups with restricted partial range T(X,Y,Z)";
  m.attr("__version__") = "0.1.0";

  py::register_exception<NotMemberError>(m, "NotMemberError", PyExc_ValueError);
  py::register_exception<NotRegularError>(m, "NotRegularError", PyExc_ValueError);
  py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError",
                                                PyExc_RuntimeError);

  py::enum_<CaseTag>(m, "CaseTag")
      .value("FULL", CaseTag::kFull)
      .value("RESTRICTED_RANGE", CaseTag::kRestrictedRange)
      .value("INVARIANT_SET", CaseTag::kInvariantSet)
      .value("PROPER", CaseTag::kProper);

  py::enum_<Filter>(m, "Filter")
      .value("ALL", Filter::kAll)
      .value("REGULAR", Filter::kRegular)
      .value("IDEMPOTENT", Filter::kIdempotent);

  py::enum_<RelationKind>(m, "RelationKind")
      .value("LAMBDA", RelationKind::kLambda)
      .value("LSTAR", RelationKind::kLstar)
      .value("RSTAR", RelationKind::kRstar);

  py::enum_<ClassMethod>(m, "ClassMethod")
      .value("CHARACTERIZATION", ClassMethod::kCharacterization)
      .value("ORACLE", ClassMethod::kOracle);

  py::class_<Universe>(m, "Universe")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("m"), py::arg("k"))
      .def_property_readonly("n", &Universe::n)
      .def_property_readonly("m", &Universe::m)
      .def_property_readonly("k", &Universe::k)
      .def_property_readonly("case_tag", &Universe::case_tag)
      .def("x_points", &Universe::x_points)
      .def("y_points", &Universe::y_points)
      .def("z_points", &Universe::z_points)
      .def("y_minus_z", &Universe::y_minus_z)
      .def("x_minus_y", &Universe::x_minus_y)
      .def(py::self == py::self)
      .def("__repr__",
           [](const Universe& u) { return "Universe" + to_string(u); });

  py::class_<Transformation>(m, "Transformation")
      .def(py::init<PointVec>(), py::arg("images"))
      .def_static("identity", &Transformation::identity, py::arg("n"))
      .def_static("parse",
                  [](const std::string& s) { return Transformation::parse(s); },
                  py::arg("literal"))
      .def_property_readonly("n", &Transformation::n)
      .def_property_readonly("images", &Transformation::images)
      .def("__getitem__",
           [](const Transformation& t, Point x) {
             if (x < 0 || x >= t.n()) throw py::index_error();
             return t[x];
           })
      .def("__len__", &Transformation::n)
      .def("__str__", &Transformation::str)
      .def("__repr__",
           [](const Transformation& t) { return "Transformation('" + t.str() + "')"; })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Transformation& t) {
        std::size_t h = 1469598103934665603ULL;
        for (Point v : t.images()) {
          h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
        }
        return h;
      });

  py::class_<ImageSet>(m, "ImageSet")
      .def(py::init<int, PointVec>(), py::arg("n"), py::arg("members"))
      .def_property_readonly("n", &ImageSet::n)
      .def_property_readonly("points", &ImageSet::points)
      .def("__len__", &ImageSet::size)
      .def("__contains__", &ImageSet::contains)
      .def(py::self == py::self)
      .def("__repr__", [](const ImageSet& s) {
        std::string out = "ImageSet{";
        for (std::size_t i = 0; i < s.points().size(); ++i) {
          if (i > 0) out += ",";
          out += std::to_string(s.points()[i]);
        }
        return out + "}";
      });

  py::class_<KernelPartition>(m, "KernelPartition")
      .def(py::init<int, std::vector<PointVec>>(), py::arg("n"), py::arg("blocks"))
      .def_property_readonly("n", &KernelPartition::n)
      .def_property_readonly("blocks", &KernelPartition::blocks)
      .def("__len__", &KernelPartition::size)
      .def(py::self == py::self);

  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def(
      "image_of",
      [](const Transformation& a, const PointVec& region) {
        return image_of(a, region);
      },
      py::arg("a"), py::arg("region"));
  m.def("kernel_of", &kernel_of, py::arg("a"));
  m.def(
      "agree_on",
      [](const Transformation& a, const Transformation& b, const PointVec& region) {
        return agree_on(a, b, region);
      },
      py::arg("a"), py::arg("b"), py::arg("region"));

  m.def("is_member", &is_member, py::arg("u"), py::arg("a"));

  py::class_<ElementStream>(m, "ElementStream")
      .def(py::init<Universe, Filter, std::optional<int>>(), py::arg("u"),
           py::arg("filter") = Filter::kAll, py::arg("stratum") = std::nullopt)
      .def("__iter__", [](ElementStream& s) -> ElementStream& { return s; })
      .def("__next__", [](ElementStream& s) {
        auto t = s.next();
        if (!t) throw py::stop_iteration();
        return *t;
      });

  m.def(
      "members",
      [](const Universe& u, Filter filter, std::optional<int> stratum,
         std::size_t limit) {
        return collect(ElementStream(u, filter, stratum), limit);
      },
      py::arg("u"), py::arg("filter") = Filter::kAll,
      py::arg("stratum") = std::nullopt, py::arg("limit") = kDefaultMaterializeLimit,
      "All qualifying members in lexicographic order.");
  m.def("random_member", &random_member, py::arg("u"), py::arg("seed"));

  m.def("is_regular_element", &is_regular_element, py::arg("u"), py::arg("a"));
  m.def("quasi_inverse", &quasi_inverse, py::arg("u"), py::arg("a"));
  m.def("is_regular_semigroup", &is_regular_semigroup, py::arg("u"));
  m.def("nonregular_witness", &nonregular_witness, py::arg("u"));
  m.def("is_idempotent", &is_idempotent, py::arg("u"), py::arg("a"));
  m.def("idempotent_with_kernel", &idempotent_with_kernel, py::arg("u"), py::arg("p"));

  m.def("lambda_related", &lambda_related, py::arg("u"), py::arg("a"), py::arg("b"));
  m.def("lstar_related", &lstar_related, py::arg("u"), py::arg("a"), py::arg("b"));
  m.def("rstar_related", &rstar_related, py::arg("u"), py::arg("a"), py::arg("b"));
  m.def("lstar_oracle", &lstar_oracle, py::arg("u"), py::arg("a"), py::arg("b"),
        py::arg("limit") = kDefaultMaterializeLimit);
  m.def("rstar_oracle", &rstar_oracle, py::arg("u"), py::arg("a"), py::arg("b"),
        py::arg("limit") = kDefaultMaterializeLimit);

  py::class_<RelationClasses>(m, "RelationClasses")
      .def_readonly("universe", &RelationClasses::universe)
      .def_readonly("kind", &RelationClasses::kind)
      .def_readonly("method", &RelationClasses::method)
      .def_readonly("classes", &RelationClasses::classes);

  m.def("relation_classes", &relation_classes, py::arg("u"), py::arg("kind"),
        py::arg("method") = ClassMethod::kCharacterization,
        py::arg("limit") = kDefaultMaterializeLimit);

  py::class_<AbundanceVerdict>(m, "AbundanceVerdict")
      .def_readonly("left", &AbundanceVerdict::left)
      .def_readonly("right", &AbundanceVerdict::right)
      .def_readonly("witness_kind", &AbundanceVerdict::witness_kind)
      .def_readonly("witness_class", &AbundanceVerdict::witness_class);

  m.def("abundance", &abundance, py::arg("u"), py::arg("empirical") = false,
        py::arg("limit") = kDefaultMaterializeLimit);

  m.def("binomial", [](unsigned long n, long r) { return to_py_int(binomial(n, r)); },
        py::arg("n"), py::arg("r"));
  m.def("factorial", [](unsigned long n) { return to_py_int(factorial(n)); },
        py::arg("n"));
  m.def("stirling2",
        [](unsigned long n, unsigned long r) { return to_py_int(stirling2(n, r)); },
        py::arg("n"), py::arg("r"));
  m.def("stirling2_by_formula",
        [](unsigned long n, unsigned long r) {
          return to_py_int(stirling2_by_formula(n, r));
        },
        py::arg("n"), py::arg("r"));
  m.def("order", [](const Universe& u) { return to_py_int(order(u)); }, py::arg("u"));
  m.def("order_stratum",
        [](const Universe& u, int r) { return to_py_int(order_stratum(u, r)); },
        py::arg("u"), py::arg("r"));
  m.def("regular_count",
        [](const Universe& u) { return to_py_int(regular_count(u)); }, py::arg("u"));
  m.def("idempotent_count",
        [](const Universe& u) { return to_py_int(idempotent_count(u)); }, py::arg("u"));

  py::class_<VerificationCell>(m, "VerificationCell")
      .def_readonly("universe", &VerificationCell::universe)
      .def_readonly("check", &VerificationCell::check)
      .def_readonly("expected", &VerificationCell::expected)
      .def_readonly("actual", &VerificationCell::actual)
      .def_readonly("passed", &VerificationCell::pass);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("suite", &VerificationReport::suite)
      .def_readonly("cells", &VerificationReport::cells)
      .def_readonly("overall", &VerificationReport::overall)
      .def("to_json", &VerificationReport::to_json)
      .def("to_text", &VerificationReport::to_text);

  m.def("verify_counts",
        [](int max_n) { return verify_counts(max_n); }, py::arg("max_n"));
  m.def("verify_relations",
        [](int max_n) { return verify_relations(max_n); }, py::arg("max_n"));
  m.def("verify_regularity",
        [](int max_n) { return verify_regularity(max_n); }, py::arg("max_n"));
  m.def("verify_abundance",
        [](int max_n) { return verify_abundance(max_n); }, py::arg("max_n"));
}

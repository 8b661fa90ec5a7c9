#include <ditlogic/dit_bit.hpp>
#include <ditlogic/error.hpp>
#include <ditlogic/logical.hpp>
#include <ditlogic/partition.hpp>
#include <ditlogic/shannon.hpp>
#include <ditlogic/stirling.hpp>
#include <ditlogic/stochastic.hpp>
#include <ditlogic/text_format.hpp>
#include <ditlogic/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ditlogic;

namespace {

using Matrix = std::vector<std::vector<double>>;

Base parse_base(const std::string& s) {
  if (s == "2" || s == "bits") return Base::two;
  if (s == "e" || s == "nats") return Base::e;
  throw Error(ErrorKind::unknown_selector, "base must be '2' or 'e', got '" + s + "'");
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  throw Error(ErrorKind::unknown_selector, "axis must be 'x' or 'y', got '" + s + "'");
}

// Exact entry points take and return "p/q" strings; the Python package maps
// them to fractions.Fraction.
ExactDistribution exact_dist(const std::vector<std::string>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return ExactDistribution(std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_of(const PairRelation& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  r.for_each_pair([&](std::size_t u, std::size_t v) { out.emplace_back(u, v); });
  return out;
}

py::dict as_dict(const TransformReport& r) {
  py::dict d;
  d["compound"] = to_string(r.compound);
  d["logical"] = r.logical;
  d["transformed"] = r.transformed;
  d["direct"] = r.direct;
  d["residual"] = r.residual;
  return d;
}

py::dict as_dict(const SampleReport& r) {
  py::dict d;
  d["estimate"] = r.estimate;
  d["trials"] = r.trials;
  d["std_error"] = r.std_error;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ditlogic, m) {
  m.doc() = "Logical and Shannon entropy of partitions and distributions";

  // ValueError subclass carrying .kind and .position.
  py::exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object type = py::module_::import("ditlogic._ditlogic").attr("Error");
      py::object exc = type(e.what());
      exc.attr("kind") = to_string(e.kind());
      exc.attr("position") = e.position() ? py::object(py::int_(*e.position())) : py::none();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const std::vector<Block>& blocks, std::size_t n) {
             return make_partition(blocks, n);
           }),
           py::arg("blocks"), py::arg("n"))
      .def_static("from_labels",
                  [](const std::vector<std::size_t>& labels) { return Partition::from_labels(labels); })
      .def_static("parse", &parse_partition, py::arg("text"), py::arg("size") = py::none())
      .def_static("discrete", &Partition::discrete)
      .def_static("indiscrete", &Partition::indiscrete)
      .def_property_readonly("size", &Partition::size)
      .def_property_readonly("blocks", &Partition::blocks)
      .def("block_of", &Partition::block_of)
      .def("__len__", &Partition::block_count)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) { return py::hash(py::str(format_partition(p))); })
      .def("__str__", &format_partition)
      .def("__repr__", [](const Partition& p) { return "Partition('" + format_partition(p) + "')"; });

  m.def("dit_set", [](const Partition& p) { return pairs_of(dit_set(p)); });
  m.def("indit_set", [](const Partition& p) { return pairs_of(indit_set(p)); });
  m.def("join", &join);
  m.def("meet", &meet);
  m.def("implication", &implication, py::arg("sigma"), py::arg("pi"),
        "Blocks of pi inside some block of sigma become singletons.");
  m.def("refines", &refines, py::arg("sigma"), py::arg("pi"), "True iff dit(sigma) is inside dit(pi).");
  m.def("mutual_dit_set", [](const Partition& a, const Partition& b) {
    return pairs_of(mutual_dit_set(a, b));
  });
  m.def("enumerate_partitions", [](std::size_t n) { return enumerate_partitions(n); });
  m.def("bell_number", &bell_number);
  m.def("refinement_covers", [](const std::vector<Partition>& ps) { return refinement_covers(ps); });

  m.def(
      "logical_entropy",
      [](const Partition& p, std::optional<std::vector<double>> w) {
        return w ? logical_entropy(p, Distribution(*w)) : logical_entropy<double>(p);
      },
      py::arg("pi"), py::arg("weights") = py::none());
  m.def("logical_entropy_exact", [](const Partition& p, std::optional<std::vector<std::string>> w) {
    return to_string(w ? logical_entropy(p, exact_dist(*w)) : logical_entropy<Rational>(p));
  }, py::arg("pi"), py::arg("weights") = py::none());
  m.def("logical_entropy_of", [](const std::vector<double>& p) {
    return logical_entropy(Distribution(p));
  }, py::arg("p"));
  m.def("logical_entropy_of_exact", [](const std::vector<std::string>& p) {
    return to_string(logical_entropy(exact_dist(p)));
  }, py::arg("p"));
  m.def("logical_mutual", [](const Partition& a, const Partition& b) {
    return logical_mutual<double>(a, b);
  });
  m.def("logical_mutual_exact", [](const Partition& a, const Partition& b) {
    return to_string(logical_mutual<Rational>(a, b));
  });
  m.def("logical_conditional", [](const Partition& a, const Partition& b) {
    return logical_conditional<double>(a, b);
  });
  m.def("logical_cross_entropy", [](const std::vector<double>& p, const std::vector<double>& q) {
    return logical_cross_entropy(Distribution(p), Distribution(q));
  });
  m.def("logical_divergence", [](const std::vector<double>& p, const std::vector<double>& q) {
    return logical_divergence(Distribution(p), Distribution(q));
  });

  m.def(
      "shannon_entropy",
      [](const Partition& p, std::optional<std::vector<double>> w, const std::string& base) {
        return w ? shannon_entropy(p, Distribution(*w), parse_base(base))
                 : shannon_entropy(p, parse_base(base));
      },
      py::arg("pi"), py::arg("weights") = py::none(), py::arg("base") = "2");
  m.def(
      "shannon_entropy_of",
      [](const std::vector<double>& p, const std::string& base) {
        return shannon_entropy(Distribution(p), parse_base(base));
      },
      py::arg("p"), py::arg("base") = "2");
  m.def(
      "cross_entropy",
      [](const std::vector<double>& p, const std::vector<double>& q, const std::string& base) {
        return cross_entropy(Distribution(p), Distribution(q), parse_base(base));
      },
      py::arg("p"), py::arg("q"), py::arg("base") = "2");
  m.def(
      "kl_divergence",
      [](const std::vector<double>& p, const std::vector<double>& q, const std::string& base) {
        return kl_divergence(Distribution(p), Distribution(q), parse_base(base));
      },
      py::arg("p"), py::arg("q"), py::arg("base") = "2");

  m.def("joint_measures", [](const Matrix& rows, const std::string& base) {
    const JointDistribution j(rows);
    const Base b = parse_base(base);
    py::dict d;
    d["h_x"] = marginal_logical_entropy(j, Axis::x);
    d["h_y"] = marginal_logical_entropy(j, Axis::y);
    d["h_xy"] = joint_logical_entropy(j);
    d["h_x_given_y"] = logical_conditional(j, Axis::y);
    d["h_y_given_x"] = logical_conditional(j, Axis::x);
    d["m_xy"] = logical_mutual(j);
    d["H_x"] = marginal_shannon_entropy(j, Axis::x, b);
    d["H_y"] = marginal_shannon_entropy(j, Axis::y, b);
    d["H_xy"] = joint_shannon_entropy(j, b);
    d["H_x_given_y"] = shannon_conditional(j, Axis::y, b);
    d["H_y_given_x"] = shannon_conditional(j, Axis::x, b);
    d["I_xy"] = shannon_mutual(j, b);
    return d;
  }, py::arg("matrix"), py::arg("base") = "2");

  m.def("dit_to_bit", [](double h, const std::string& base) { return dit_to_bit(h, parse_base(base)); },
        py::arg("h"), py::arg("base") = "2");
  m.def("bit_to_dit", [](double h, const std::string& base) { return bit_to_dit(h, parse_base(base)); },
        py::arg("H"), py::arg("base") = "2");
  m.def(
      "dit_bit_transform",
      [](const std::string& compound, std::optional<std::vector<double>> p,
         std::optional<std::vector<double>> q, std::optional<Matrix> joint,
         const std::string& given, const std::string& base) {
        TransformInputs in;
        if (p) in.p = Distribution(*p);
        if (q) in.q = Distribution(*q);
        if (joint) in.joint = JointDistribution(*joint);
        in.given = parse_axis(given);
        return as_dict(dit_bit_transform(compound, in, parse_base(base)));
      },
      py::arg("compound"), py::arg("p") = py::none(), py::arg("q") = py::none(),
      py::arg("joint") = py::none(), py::arg("given") = "y", py::arg("base") = "2");

  m.def("stirling_entropy", [](const std::vector<std::uint64_t>& sizes) {
    const auto r = stirling_entropy(sizes);
    py::dict d;
    d["exact"] = r.exact;
    d["approx2"] = r.approx2;
    d["approx3"] = r.approx3;
    d["error2"] = r.error2;
    d["error3"] = r.error3;
    return d;
  });

  m.def("pair_distinction_rate", [](const std::vector<double>& p, std::uint64_t trials,
                                    std::uint64_t seed) {
    return as_dict(pair_distinction_rate(Distribution(p), trials, seed));
  }, py::arg("p"), py::arg("trials"), py::arg("seed") = 1);
  m.def("average_difference_rate", [](const std::vector<double>& p, std::uint64_t length,
                                      std::uint64_t seed) {
    return as_dict(average_difference_rate(Distribution(p), length, seed));
  }, py::arg("p"), py::arg("length"), py::arg("seed") = 1);
  m.def("typical_message_stats", [](const std::vector<double>& p, std::uint64_t length,
                                    std::uint64_t samples, std::uint64_t seed) {
    return as_dict(typical_message_stats(Distribution(p), length, samples, seed));
  }, py::arg("p"), py::arg("length"), py::arg("samples"), py::arg("seed") = 1);

  m.def("run_verification", [](std::size_t max_n, std::uint64_t seed) {
    const auto r = run_verification(max_n, seed);
    py::dict suites;
    for (const auto& s : r.suites) {
      py::dict d;
      d["passed"] = s.passed();
      d["checks"] = s.checks;
      d["failures"] = s.failures;
      d["worst_residual"] = s.worst_residual;
      suites[py::str(s.name)] = d;
    }
    py::dict d;
    d["passed"] = r.passed();
    d["suites"] = suites;
    d["pairs_checked_at_max_n"] = r.pairs_checked_at_max_n;
    d["pairs_checked_total"] = r.pairs_checked_total;
    return d;
  }, py::arg("max_n") = 5, py::arg("seed") = 1);
}

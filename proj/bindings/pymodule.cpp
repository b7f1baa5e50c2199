#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logjet/runner.hpp"

namespace py = pybind11;
using namespace logjet;

namespace {

MultiIndex to_index(const std::vector<std::uint32_t>& v) { return MultiIndex(v); }

std::vector<MultiIndex> to_indices(const std::vector<std::vector<std::uint32_t>>& v) {
  std::vector<MultiIndex> out;
  out.reserve(v.size());
  for (const auto& c : v) out.emplace_back(c);
  return out;
}

py::object big_to_py(const ExactInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::dict check_to_dict(const CheckResult& res) {
  py::dict d;
  d["input"] = render(res.input);
  d["computed"] = render(res.computed);
  d["expected"] = render(res.expected);
  d["residual"] = render(res.residual);
  d["pass"] = res.pass;
  d["closure_size"] = res.closure_size;
  d["seconds"] = res.seconds;
  return d;
}

/// Params plus the memoized quotient machinery behind one handle.
class Jet {
 public:
  Jet(std::uint32_t p, std::uint32_t m, std::uint32_t n) : params_(p, m, n), ctx_(params_) {}

  const Params& params() const { return params_; }

  DeltaSymbol symbol(const std::vector<std::uint32_t>& eta,
                     const std::vector<std::vector<std::uint32_t>>& slots) const {
    return DeltaSymbol{to_index(eta), to_indices(slots)};
  }

  Chain chain_of(const DeltaSymbol& s, Coeff c) const {
    return Chain::single(params_, s, c);
  }

  Params params_;
  QuotientContext ctx_;
};

}  // namespace

PYBIND11_MODULE(_logjet, m) {
  m.doc() = "Exact arithmetic for the level-m logarithmic jet complex over F_p";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<ConsistencyError>(m, "ConsistencyError");

  py::class_<Params>(m, "Params")
      .def(py::init<std::uint32_t, std::uint32_t, std::uint32_t>(), py::arg("p"),
           py::arg("m"), py::arg("n"))
      .def_readonly("p", &Params::p)
      .def_readonly("m", &Params::m)
      .def_readonly("n", &Params::n)
      .def_readonly("pm", &Params::pm)
      .def("__repr__", [](const Params& p) {
        return "Params(p=" + std::to_string(p.p) + ", m=" + std::to_string(p.m) +
               ", n=" + std::to_string(p.n) + ")";
      });

  py::class_<DeltaSymbol>(m, "Symbol")
      .def(py::init([](const std::vector<std::uint32_t>& eta,
                       const std::vector<std::vector<std::uint32_t>>& slots) {
             return DeltaSymbol{to_index(eta), to_indices(slots)};
           }),
           py::arg("eta"), py::arg("slots") = std::vector<std::vector<std::uint32_t>>{})
      .def_static("parse", [](const std::string& text) { return parse_symbol(text); })
      .def_property_readonly("eta",
                             [](const DeltaSymbol& s) { return s.eta.components(); })
      .def_property_readonly("slots",
                             [](const DeltaSymbol& s) {
                               std::vector<std::vector<std::uint32_t>> out;
                               for (const auto& j : s.slots) out.push_back(j.components());
                               return out;
                             })
      .def_property_readonly("degree", &DeltaSymbol::degree)
      .def("__str__", [](const DeltaSymbol& s) { return render(s); })
      .def("__repr__", [](const DeltaSymbol& s) { return render(s); })
      .def("__eq__", [](const DeltaSymbol& a, const DeltaSymbol& b) { return a == b; })
      .def("__lt__", [](const DeltaSymbol& a, const DeltaSymbol& b) { return a < b; })
      .def("__hash__", [](const DeltaSymbol& s) { return py::hash(py::str(render(s))); });

  py::class_<Chain>(m, "Chain")
      .def_property_readonly("degree", &Chain::degree)
      .def_property_readonly("is_zero", &Chain::is_zero)
      .def("terms",
           [](const Chain& v) {
             std::vector<std::pair<DeltaSymbol, Coeff>> out(v.terms().begin(),
                                                            v.terms().end());
             return out;
           })
      .def("__str__", [](const Chain& v) { return render(v); })
      .def("__repr__", [](const Chain& v) { return render(v); })
      .def("__eq__", [](const Chain& a, const Chain& b) { return a == b; });

  m.def("digit_sum", &digit_sum, py::arg("t"), py::arg("p"));
  m.def("binom", [](std::uint64_t k, std::uint64_t kp) { return big_to_py(binom(k, kp)); });
  m.def("mbinom", [](const Params& p, std::uint64_t k, std::uint64_t kp) {
    return big_to_py(mbinom(p, k, kp));
  });
  m.def("qbinom", [](const Params& p, std::uint64_t k, std::uint64_t kp) {
    return big_to_py(qbinom(p, k, kp));
  });
  m.def("qbinom_fraction", [](const Params& p, std::uint64_t k, std::uint64_t kp) {
    ExactRational q = qbinom_rational(p, k, kp);
    auto fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::module_::import("builtins").attr("int")(
                        ExactInt(boost::multiprecision::numerator(q)).str()),
                    py::module_::import("builtins").attr("int")(
                        ExactInt(boost::multiprecision::denominator(q)).str()));
  });
  m.def("qbinom_mod", &qbinom_mod);
  m.def("sigma", &sigma);
  m.def("gamma", [](const Params& p, const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b, const std::vector<std::uint32_t>& c) {
    return gamma(p, to_index(a), to_index(b), to_index(c));
  });

  py::class_<Jet>(m, "Jet")
      .def(py::init<std::uint32_t, std::uint32_t, std::uint32_t>(), py::arg("p"),
           py::arg("m") = 1, py::arg("n") = 1)
      .def_property_readonly("params", &Jet::params)
      .def("symbol", &Jet::symbol, py::arg("eta"),
           py::arg("slots") = std::vector<std::vector<std::uint32_t>>{})
      .def("chain", &Jet::chain_of, py::arg("symbol"), py::arg("coeff") = 1)
      .def("parse_chain",
           [](Jet& j, const std::string& text, std::size_t zero_degree) {
             return parse_chain(j.params_, text, zero_degree);
           },
           py::arg("text"), py::arg("zero_degree") = 0)
      .def("add", [](Jet& j, const Chain& a, const Chain& b) { return add(j.params_, a, b); })
      .def("scale",
           [](Jet& j, Coeff c, const Chain& a) { return scale(j.params_, c, a); })
      .def("diff0", [](Jet& j, const std::vector<std::uint32_t>& i) {
        return diff0(j.params_, to_index(i));
      })
      .def("diff1_slot", [](Jet& j, const std::vector<std::uint32_t>& s) {
        return diff1_slot(j.params_, to_index(s));
      })
      .def("differential",
           [](Jet& j, const Chain& v) { return differential(j.params_, v); })
      .def("relation",
           [](Jet& j, const std::vector<std::uint32_t>& eta, std::size_t position,
              const std::vector<std::uint32_t>& inner,
              const std::vector<std::vector<std::uint32_t>>& before,
              const std::vector<std::vector<std::uint32_t>>& after) {
             return relation_chain(j.params_, RelationSpec{to_index(eta), position,
                                                           to_index(inner), to_indices(before),
                                                           to_indices(after)});
           },
           py::arg("eta"), py::arg("position"), py::arg("inner"),
           py::arg("before") = std::vector<std::vector<std::uint32_t>>{},
           py::arg("after") = std::vector<std::vector<std::uint32_t>>{})
      .def("quotient_zero", [](Jet& j, const Chain& v) { return j.ctx_.quotient_zero(v); })
      .def("basis_expand", [](Jet& j, const DeltaSymbol& s) { return j.ctx_.basis_expand(s); })
      .def("h1", [](Jet& j, const DeltaSymbol& s) { return h1(j.params_, s); })
      .def("h", [](Jet& j, const Chain& v) { return h(j.ctx_, v); })
      .def("pi", [](Jet& j, std::size_t i, const Chain& v) { return pi(j.params_, i, v); })
      .def("permute",
           [](Jet& j, const std::vector<std::size_t>& perm, const Chain& v) {
             return permute(j.params_, perm, v);
           })
      .def("homotopy_check",
           [](Jet& j, const DeltaSymbol& s) { return check_to_dict(homotopy_check(j.ctx_, s)); })
      .def("poincare_contract",
           [](Jet& j, const Chain& v) { return poincare_contract(j.ctx_, v); });

  m.def(
      "run_suites",
      [](std::uint32_t p, std::uint32_t m, std::uint32_t n, py::object max_weight,
         std::uint32_t max_degree, py::object suites, std::uint32_t jobs) {
        RunConfig cfg;
        cfg.p = p;
        cfg.m = m;
        cfg.n = n;
        cfg.max_degree = max_degree;
        cfg.jobs = jobs;
        cfg.max_eta_weight =
            max_weight.is_none() ? 2 * Params(p, m, n).pm : max_weight.cast<std::uint64_t>();
        if (!suites.is_none()) {
          cfg.suites.clear();
          for (auto item : suites.cast<py::list>()) {
            auto s = suite_from_name(item.cast<std::string>());
            if (!s) throw std::invalid_argument("unknown suite");
            cfg.suites.push_back(*s);
          }
        }
        VerificationReport rep = run(cfg);
        py::dict out;
        out["pass"] = rep.overall_pass;
        out["report"] = render_report(rep);
        out["body"] = render_report_body(rep);
        return out;
      },
      py::arg("p") = 2, py::arg("m") = 1, py::arg("n") = 1, py::arg("max_weight") = py::none(),
      py::arg("max_degree") = 2, py::arg("suites") = py::none(), py::arg("jobs") = 1);
}

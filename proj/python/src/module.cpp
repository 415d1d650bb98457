#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eulab/bounds.hpp"
#include "eulab/eint.hpp"
#include "eulab/error.hpp"
#include "eulab/factor.hpp"
#include "eulab/io.hpp"
#include "eulab/polyprod.hpp"
#include "eulab/search.hpp"

namespace py = pybind11;
using eulab::EInt;
namespace b = eulab::bounds;

namespace {

py::int_ to_py(const eulab::polyprod::BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

eulab::polyprod::BigInt from_py(const py::int_& v) {
  return eulab::polyprod::BigInt(py::str(v).cast<std::string>());
}

void bind_eint(py::module_& m) {
  py::class_<EInt>(m, "EInt", "a + b*w with w a primitive cube root of unity")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("a"), py::arg("b") = 0)
      .def_readonly("a", &EInt::a)
      .def_readonly("b", &EInt::b)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const EInt& x) { return py::hash(py::make_tuple(x.a, x.b)); })
      .def("__repr__", [](const EInt& x) { return "EInt(" + std::to_string(x.a) + ", " + std::to_string(x.b) + ")"; })
      .def("__str__", [](const EInt& x) { return eulab::to_string(x); })
      .def("norm", [](const EInt& x) { return eulab::norm(x); })
      .def("conj", [](const EInt& x) { return eulab::conj(x); })
      .def("is_canonical", [](const EInt& x) { return eulab::is_canonical(x); })
      .def("__pow__", [](const EInt& x, unsigned k) { return eulab::pow(x, k); });

  m.def("parse_eint", [](const std::string& s) { return eulab::parse_eint(s); });
  m.def("canonical_associate", [](EInt x) {
    const auto [y, u] = eulab::canonical_associate(x);
    return py::make_tuple(y, u.power());
  }, "(y, k) with y = (1 + w)^k * x canonical");
  m.def("divmod", [](EInt x, EInt y) {
    const auto d = eulab::divmod(x, y);
    return py::make_tuple(d.quotient, d.remainder);
  });
  m.def("gcd", &eulab::gcd);
  m.def("exact_div", &eulab::exact_div);
}

void bind_factor(py::module_& m) {
  m.def("is_prime", &eulab::is_prime);
  m.def("factor_rational", [](std::int64_t n) {
    const auto f = eulab::factor_rational(n);
    py::list out;
    for (const auto& pp : f.factors) out.append(py::make_tuple(pp.p, pp.e));
    return py::make_tuple(f.sign, out);
  }, "(sign, [(p, e), ...])");
  m.def("factor_e", [](EInt x) {
    const auto f = eulab::factor_e(x);
    py::list out;
    for (const auto& pp : f.factors) out.append(py::make_tuple(pp.prime, pp.exponent));
    return py::make_tuple(f.unit.value(), out);
  }, "(unit, [(prime, e), ...]) with canonical primes in (norm, a, b) order");
  m.def("classify_prime", [](std::uint64_t p) { return std::string(eulab::to_string(eulab::classify_prime(p))); });
  m.def("split_prime", &eulab::split_prime);
  m.def("omega_e", &eulab::omega_e);
  m.def("omega_n", &eulab::omega_n);
  m.def("tau_e", &eulab::tau_e);
  m.def("prime_pi", &eulab::prime_pi);
}

void bind_bounds(py::module_& m) {
  py::class_<b::PrimeConstant>(m, "PrimeConstant")
      .def_readonly("prime", &b::PrimeConstant::prime)
      .def_readonly("gamma", &b::PrimeConstant::gamma)
      .def_readonly("delta", &b::PrimeConstant::delta)
      .def_readonly("negative_prime_power", &b::PrimeConstant::negative_prime_power)
      .def_readonly("c", &b::PrimeConstant::c);

  py::class_<b::RhoConstants>(m, "RhoConstants")
      .def_readonly("rho", &b::RhoConstants::rho)
      .def_readonly("primes", &b::RhoConstants::primes)
      .def_readonly("tau", &b::RhoConstants::tau)
      .def_readonly("threshold", &b::RhoConstants::threshold)
      .def_readonly("constant", &b::RhoConstants::constant)
      .def_property_readonly("c_rho", &b::RhoConstants::c_rho_value)
      .def("to_json", [](const b::RhoConstants& k) { return eulab::io::to_json(k).dump(); });
  m.def("rho_constants", &b::rho_constants);

  py::class_<b::BoundReport>(m, "BoundReport")
      .def_readonly("theorem", &b::BoundReport::theorem)
      .def_readonly("omega", &b::BoundReport::omega)
      .def_readonly("bound", &b::BoundReport::bound)
      .def_readonly("passed", &b::BoundReport::passed)
      .def_readonly("zero_factor", &b::BoundReport::zero_factor)
      .def_readonly("primes", &b::BoundReport::primes)
      .def_property_readonly("comparison",
                             [](const b::BoundReport& r) { return r.comparison == b::Comparison::greater ? ">" : ">="; })
      .def("to_json", [](const b::BoundReport& r) { return eulab::io::to_json(r).dump(); });

  using ESet = std::vector<EInt>;
  using ZSet = std::vector<std::int64_t>;
  m.def("verify_sum_bound", [](const ESet& s) { return b::verify_sum_bound(s); });
  m.def("verify_twisted_bound", [](const ESet& s, EInt rho, bool general) {
    return b::verify_twisted_bound(s, rho, {.general_path_for_rho_one = general});
  }, py::arg("set"), py::arg("rho"), py::arg("general_path_for_rho_one") = false);
  m.def("verify_norm_minus_bound", [](const ZSet& s) { return b::verify_norm_minus_bound(s); });
  m.def("verify_norm_plus_bound", [](const ZSet& s) { return b::verify_norm_plus_bound(s); });
  m.def("verify_difference_bound", [](const ESet& s) { return b::verify_difference_bound(s); });
  m.def("verify_erdos_turan", [](const ZSet& s) { return b::verify_erdos_turan(s); });

  py::class_<b::RefinementStep>(m, "RefinementStep")
      .def_readonly("prime", &b::RefinementStep::prime)
      .def_property_readonly("rule", [](const b::RefinementStep& s) { return std::string(b::to_string(s.rule)); })
      .def_readonly("size_before", &b::RefinementStep::size_before)
      .def_readonly("size_after", &b::RefinementStep::size_after);

  py::class_<b::RefinementTrace>(m, "RefinementTrace")
      .def_readonly("chain", &b::RefinementTrace::chain)
      .def_readonly("steps", &b::RefinementTrace::steps)
      .def_readonly("distinct_combinations", &b::RefinementTrace::distinct_combinations)
      .def_property_readonly("final_set", &b::RefinementTrace::final_set)
      .def_property_readonly("ok", &b::RefinementTrace::ok)
      .def("to_json", [](const b::RefinementTrace& t) { return eulab::io::to_json(t).dump(); });
  m.def("refine_sums", [](const ESet& s) { return b::refine_sums(s); });
  m.def("refine_twisted_sums", [](const ESet& s, EInt rho, bool allow_rho_one) {
    return b::refine_twisted_sums(s, rho, {.allow_rho_one = allow_rho_one});
  }, py::arg("set"), py::arg("rho"), py::arg("allow_rho_one") = false);
  m.def("reduced_combination", &b::reduced_combination);
  m.def("product_prime_support", [](const ESet& s, EInt rho) { return b::product_prime_support(s, rho); });
}

void bind_search(py::module_& m) {
  namespace s = eulab::search;
  py::class_<s::SearchResult>(m, "SearchResult")
      .def_readonly("minimum", &s::SearchResult::minimum)
      .def_readonly("witness_count", &s::SearchResult::witness_count)
      .def_readonly("witnesses", &s::SearchResult::witnesses)
      .def_readonly("nodes_visited", &s::SearchResult::nodes_visited)
      .def_readonly("seconds", &s::SearchResult::seconds);
  m.def("search_min", [](int k, int max_element, bool primitive_only, bool all_witnesses, int workers) {
    py::gil_scoped_release release;
    return s::search_min({.k = k, .max_element = max_element, .primitive_only = primitive_only,
                          .all_witnesses = all_witnesses, .workers = workers});
  }, py::arg("k"), py::arg("max_element"), py::arg("primitive_only") = true, py::arg("all_witnesses") = false,
     py::arg("workers") = 1);
}

void bind_polyprod(py::module_& m) {
  namespace pp = eulab::polyprod;
  py::class_<pp::SparsePoly>(m, "SparsePoly")
      .def(py::init([](int n, std::vector<std::int64_t> r, std::vector<int> mm) {
             pp::SparsePoly f{n, std::move(r), std::move(mm)};
             f.validate();
             return f;
           }),
           py::arg("n"), py::arg("r"), py::arg("m"))
      .def_readonly("n", &pp::SparsePoly::n)
      .def_readonly("r", &pp::SparsePoly::r)
      .def_readonly("m", &pp::SparsePoly::m)
      .def("__call__", &pp::SparsePoly::operator());
  m.def("build_vectors", [](const pp::SparsePoly& f, const std::vector<std::int64_t>& as,
                            const std::vector<std::int64_t>& bs) {
    const auto v = pp::build_vectors(f, as, bs);
    return py::make_tuple(v.a.vectors, v.b.vectors);
  }, "(a' vectors, b' vectors)");
  m.def("check_independence", [](const std::vector<std::vector<std::int64_t>>& vectors) {
    if (vectors.empty()) throw eulab::DomainError("check_independence: no vectors");
    const pp::VectorSet set{static_cast<int>(vectors.front().size()), vectors};
    const auto cert = pp::check_independence(set);
    return py::make_tuple(cert.independent, cert.subsets_checked, cert.singular_subset);
  }, "(independent, subsets_checked, first singular subset or None)");
  m.def("determinant", [](const std::vector<std::vector<py::int_>>& rows) {
    std::vector<std::vector<pp::BigInt>> big;
    for (const auto& row : rows) {
      big.emplace_back();
      for (const auto& v : row) big.back().push_back(from_py(v));
    }
    return to_py(pp::determinant(std::move(big)));
  });
  m.def("omega_product", [](const pp::SparsePoly& f, const std::vector<std::int64_t>& as,
                            const std::vector<std::int64_t>& bs) { return pp::omega_product(f, as, bs); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eisenstein integer arithmetic, prime-support bounds and searches";
  py::register_exception<eulab::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<eulab::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<eulab::OverflowError>(m, "OverflowError", PyExc_OverflowError);
  bind_eint(m);
  bind_factor(m);
  bind_bounds(m);
  bind_search(m);
  bind_polyprod(m);
  m.attr("__version__") = "0.1.0";
}

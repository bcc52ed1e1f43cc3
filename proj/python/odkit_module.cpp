#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>

#include "odkit/descriptors.hpp"
#include "odkit/render.hpp"
#include "odkit/theorem.hpp"

namespace py = pybind11;
using namespace odkit;

namespace {

constexpr std::uint64_t kDefaultSieveLimit = 20'000'000;

SievedRange make_sieve(std::uint64_t needed, std::uint64_t limit) {
  needed = std::max<std::uint64_t>(needed, 2);
  if (needed > limit)
    throw ResourceError("needs a sieve up to " + std::to_string(needed) + " but sieve_limit is " +
                        std::to_string(limit));
  return SievedRange(needed);
}

Family family_from(const std::string& name) {
  if (name == "alt") return Family::Alt;
  if (name == "sym") return Family::Sym;
  throw DomainError("family must be 'alt' or 'sym', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_odkit, m) {
  m.doc() = "Prime graphs, degree patterns and OD-characterization checks";

  auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NonQualifyingError>(m, "NonQualifyingError", base.ptr());

  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("legendre_exponent", &legendre_exponent, py::arg("q"), py::arg("n"));
  m.def(
      "primes_up_to",
      [](std::uint64_t n) { return SievedRange(std::max<std::uint64_t>(n, 2)).primes_up_to(n); },
      py::arg("n"));
  m.def("prime_count",
        [](std::uint64_t n) { return SievedRange(std::max<std::uint64_t>(n, 2)).prime_count(n); },
        py::arg("n"));
  m.def(
      "partitions",
      [](std::uint32_t k) {
        std::vector<std::vector<std::uint32_t>> out;
        for (auto& p : partitions(k)) out.push_back(std::move(p.parts));
        return out;
      },
      py::arg("m"));
  m.def("partition_count", &partition_count, py::arg("m"));

  py::class_<GroupExpr>(m, "GroupExpr")
      .def_static("parse", &parse_group_expr, py::arg("text"))
      .def_static("alt", &GroupExpr::alt, py::arg("n"))
      .def_static("sym", &GroupExpr::sym, py::arg("n"))
      .def_static("abelian", &GroupExpr::abelian, py::arg("p"), py::arg("parts"))
      .def_static("product", &GroupExpr::product, py::arg("left"), py::arg("right"))
      .def("__mul__", &GroupExpr::product)
      .def("__eq__", [](const GroupExpr& a, const GroupExpr& b) { return a == b; })
      .def("__hash__", [](const GroupExpr& e) { return std::hash<std::string>{}(to_string(e)); })
      .def("__str__", [](const GroupExpr& e) { return to_string(e); })
      .def("__repr__", [](const GroupExpr& e) { return "GroupExpr.parse('" + to_string(e) + "')"; });

  // Structured results cross the boundary as JSON text; the Python package
  // decodes them so both front ends share one schema.
  m.def(
      "_graph_json",
      [](const GroupExpr& e, std::uint64_t limit) {
        return to_json(gk_of(e, make_sieve(required_sieve_limit(e), limit))).dump();
      },
      py::arg("expr"), py::arg("sieve_limit") = kDefaultSieveLimit);
  m.def(
      "_degree_pattern_json",
      [](const GroupExpr& e, std::uint64_t limit) {
        py::gil_scoped_release release;
        return to_json(degree_pattern_of(e, make_sieve(required_sieve_limit(e), limit))).dump();
      },
      py::arg("expr"), py::arg("sieve_limit") = kDefaultSieveLimit);
  m.def(
      "_order_json",
      [](const GroupExpr& e, std::uint64_t limit) {
        return to_json(order_of(e, make_sieve(required_sieve_limit(e), limit))).dump();
      },
      py::arg("expr"), py::arg("sieve_limit") = kDefaultSieveLimit);
  m.def(
      "same_od",
      [](const GroupExpr& a, const GroupExpr& b, std::uint64_t limit) {
        py::gil_scoped_release release;
        const auto needed = std::max(required_sieve_limit(a), required_sieve_limit(b));
        return same_od(a, b, make_sieve(needed, limit));
      },
      py::arg("a"), py::arg("b"), py::arg("sieve_limit") = kDefaultSieveLimit);
  m.def("dot", [](const GroupExpr& e, std::uint64_t limit) {
    return to_dot(gk_of(e, make_sieve(required_sieve_limit(e), limit)));
  }, py::arg("expr"), py::arg("sieve_limit") = kDefaultSieveLimit);

  m.def(
      "_candidate_json", [](std::uint32_t alpha) { return to_json(check_candidate(alpha)).dump(); },
      py::arg("alpha"));
  m.def(
      "_search_json", [](std::uint32_t max_alpha) { return search_json(search_candidates(max_alpha)).dump(); },
      py::arg("max_alpha"));
  m.def(
      "_verify_json",
      [](std::uint32_t alpha, std::uint64_t limit) {
        const CandidateWitness w = check_candidate(alpha);
        if (!w.qualifies) throw NonQualifyingError(alpha, w.reason);
        py::gil_scoped_release release;
        const SievedRange sieved = make_sieve(static_cast<std::uint64_t>(w.p) + 6, limit);
        return to_json(verify_main_theorem(alpha, sieved)).dump();
      },
      py::arg("alpha"), py::arg("sieve_limit") = kDefaultSieveLimit);
  m.def(
      "_od_class_json",
      [](std::uint32_t alpha, const std::string& family) {
        const Family f = family_from(family);
        return od_class_json(alpha, f, od_class(alpha, f)).dump();
      },
      py::arg("alpha"), py::arg("family") = "alt");
}

// Python bindings: a thin JSON bridge over the core library. Matrices and
// polynomials use the same text formats as the CLI; structured results come
// back as JSON strings for the package wrapper to decode.
#include <pybind11/pybind11.h>

#include <cstdint>
#include <string>

#include "lced/code.hpp"
#include "lced/conjectures.hpp"
#include "lced/decide.hpp"
#include "lced/io.hpp"

namespace py = pybind11;

namespace {

using nlohmann::ordered_json;

lced::SearchStrategy strategy_of(const std::string& order, std::uint64_t limit,
                                 std::uint64_t seed) {
  auto o = lced::parse_search_order(order);
  if (!o) throw lced::Error("unknown search order \"" + order + "\"");
  lced::SearchStrategy s;
  s.order = *o;
  if (limit) s.limit = limit;
  s.seed = seed;
  return s;
}

std::string decide_json(const std::string& matrix_text,
                        const std::string& order, std::uint64_t limit,
                        std::uint64_t seed, bool pure) {
  lced::Matrix g = lced::parse_matrix_string(matrix_text);
  lced::SearchStrategy strat = strategy_of(order, limit, seed);
  lced::DecideOptions opt =
      pure ? lced::DecideOptions::pure_search(strat) : lced::DecideOptions{};
  opt.strategy = strat;

  ordered_json doc;
  doc["strategy"] = lced::strategy_fingerprint(strat);
  try {
    doc["verdict"] = lced::to_json(lced::decide(g, opt));
  } catch (const lced::LimitReachedError& e) {
    doc["verdict"] = nullptr;
    doc["inconclusive"] = true;
    doc["perms_examined"] = e.examined;
  }
  return doc.dump();
}

std::string gram_det(const std::string& matrix_text,
                     const std::string& cycles) {
  lced::Matrix g = lced::parse_matrix_string(matrix_text);
  lced::Permutation p = lced::Permutation::parse_cycles(g.cols(), cycles);
  return lced::det_gpgt(g, p).str();
}

std::string sweep_json(const std::string& field, std::size_t k, std::size_t n,
                       bool canonical, unsigned jobs, std::uint64_t budget,
                       const std::string& order, std::uint64_t limit,
                       std::uint64_t seed) {
  lced::SweepOptions opt;
  opt.strategy = strategy_of(order, limit, seed);
  opt.canonical = canonical;
  opt.jobs = jobs;
  opt.budget = budget;
  return lced::to_json(lced::sweep_conjecture(lced::Field::parse(field), k, n,
                                              opt))
      .dump();
}

std::string pik_json(const std::string& field, std::size_t k, bool symmetric,
                     std::uint64_t budget) {
  lced::PiOptions opt;
  opt.symmetric_only = symmetric;
  opt.budget = budget;
  return lced::to_json(lced::verify_pi_k(lced::Field::parse(field), k, opt))
      .dump();
}

std::string identities_json(const std::string& field, std::size_t k,
                            std::uint64_t trials, std::uint64_t seed) {
  lced::IdentityOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  lced::IdentityReport r =
      field == "Z" ? lced::identity_suite_integers(k, opt)
                   : lced::identity_suite(lced::Field::parse(field), k, opt);
  return lced::to_json(r).dump();
}

std::string cyclic_json(const std::string& field, const std::string& poly,
                        std::size_t n, const std::string& lambda,
                        const std::string& order, std::uint64_t limit,
                        std::uint64_t seed) {
  lced::Field f = lced::Field::parse(field);
  return lced::cyclic_report(lced::parse_poly_literal(f, poly), n,
                             lced::parse_element(f, lambda),
                             strategy_of(order, limit, seed))
      .dump();
}

py::object certificate_json(std::uint64_t p, std::uint64_t m, std::size_t k,
                            std::size_t n) {
  auto cert = lced::all_lced_certificate(p, m, k, n);
  if (!cert) return py::none();
  return py::str(lced::to_json(*cert).dump());
}

std::string dual_generator(const std::string& matrix_text) {
  lced::LinearCode c =
      lced::LinearCode::from_generator(lced::parse_matrix_string(matrix_text));
  return lced::format_matrix_text(lced::dual(c).generator());
}

std::size_t min_distance_of(const std::string& matrix_text) {
  return lced::min_distance(
      lced::LinearCode::from_generator(lced::parse_matrix_string(matrix_text)));
}

std::string roundtrip(const std::string& matrix_text) {
  return lced::format_matrix_text(lced::parse_matrix_string(matrix_text));
}

}  // namespace

PYBIND11_MODULE(_lced, m) {
  m.doc() = "exact LCED decisions for linear codes over finite fields";

  py::register_exception<lced::Error>(m, "LcedError");

  m.def("decide_json", &decide_json, py::arg("matrix_text"),
        py::arg("order") = "identity-first", py::arg("limit") = 0,
        py::arg("seed") = 0, py::arg("pure") = false,
        "Decide one generator matrix given in the text format.");
  m.def("gram_det", &gram_det, py::arg("matrix_text"),
        py::arg("cycles") = "id",
        "det(G P G^T) for a permutation in cycle notation.");
  m.def("sweep_json", &sweep_json, py::arg("field"), py::arg("k"),
        py::arg("n"), py::arg("canonical") = false, py::arg("jobs") = 1,
        py::arg("budget") = 100'000'000,
        py::arg("order") = "identity-first", py::arg("limit") = 0,
        py::arg("seed") = 0,
        "Sweep every standard-form matrix in one (field, k, n) cell.");
  m.def("pik_json", &pik_json, py::arg("field"), py::arg("k"),
        py::arg("symmetric") = false, py::arg("budget") = 100'000'000,
        "Scan matrices whose permuted copies all have eigenvalue -1.");
  m.def("identities_json", &identities_json, py::arg("field"), py::arg("k"),
        py::arg("trials") = 100, py::arg("seed") = 1,
        "Randomized permutation-sum identity checks; field \"Z\" for exact "
        "integers.");
  m.def("cyclic_json", &cyclic_json, py::arg("field"), py::arg("poly"),
        py::arg("n"), py::arg("lambda") = "1",
        py::arg("order") = "identity-first", py::arg("limit") = 0,
        py::arg("seed") = 0,
        "Constacyclic pathway: coprimality, reciprocal construction, "
        "decision.");
  m.def("certificate_json", &certificate_json, py::arg("p"), py::arg("m"),
        py::arg("k"), py::arg("n"),
        "Field-wide certificate that every [n,k] code is LCED, or None.");
  m.def("dual_generator", &dual_generator, py::arg("matrix_text"),
        "Generator of the dual code, in the text format.");
  m.def("min_distance", &min_distance_of, py::arg("matrix_text"),
        "Minimum Hamming distance by full enumeration.");
  m.def("roundtrip", &roundtrip, py::arg("matrix_text"),
        "Parse and re-format a matrix (normalizes whitespace and comments).");

  m.attr("__version__") = "0.1.0";
}

#include "lced/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "lced/errors.hpp"

namespace lced {

namespace {

std::vector<std::string> line_tokens(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last)
    throw Error("bad integer \"" + std::string(s) + "\"");
  return v;
}

std::size_t parse_count(std::string_view s) {
  const std::int64_t v = parse_int(s);
  if (v < 0) throw Error("expected a nonnegative count");
  return static_cast<std::size_t>(v);
}

}  // namespace

FieldElement parse_element(Field f, std::string_view token) {
  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = token.find(':', start);
    const auto piece = token.substr(
        start, colon == std::string_view::npos ? colon : colon - start);
    parts.push_back(parse_int(piece));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() > f.degree())
    throw Error("entry \"" + std::string(token) + "\" has too many coordinates");
  return f.from_coeffs(parts);
}

Matrix parse_matrix_text(std::istream& in) {
  std::size_t lineno = 0;
  std::optional<Field> f;
  std::optional<Matrix> m;
  std::size_t k = 0, n = 0, row = 0;
  bool have_dims = false;

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = line_tokens(line);
    if (toks.empty()) continue;
    try {
      if (!f) {
        if (toks.size() != 1) throw Error("expected a single field literal");
        f = Field::parse(toks[0]);
      } else if (!have_dims) {
        if (toks.size() != 2) throw Error("expected \"k n\"");
        k = parse_count(toks[0]);
        n = parse_count(toks[1]);
        m.emplace(*f, k, n);
        have_dims = true;
      } else {
        if (row >= k) throw Error("more rows than the declared k");
        if (toks.size() != n)
          throw Error("expected " + std::to_string(n) + " entries, got " +
                      std::to_string(toks.size()));
        for (std::size_t j = 0; j < n; ++j)
          m->at(row, j) = parse_element(*f, toks[j]);
        ++row;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!f) throw ParseError(lineno + 1, "missing field literal");
  if (!have_dims) throw ParseError(lineno + 1, "missing \"k n\" line");
  if (row < k)
    throw ParseError(lineno + 1, "expected " + std::to_string(k) +
                                     " rows, got " + std::to_string(row));
  return *m;
}

Matrix parse_matrix_string(const std::string& text) {
  std::istringstream is(text);
  return parse_matrix_text(is);
}

Matrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open \"" + path + "\"");
  return parse_matrix_text(in);
}

std::string format_matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << m.field().literal() << "\n" << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m.at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

Polynomial parse_poly_literal(Field f, std::string_view text) {
  std::vector<FieldElement> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto piece = text.substr(start, comma - start);
    if (piece.empty()) throw Error("empty polynomial coefficient");
    coeffs.push_back(parse_element(f, piece));
    start = comma + 1;
  }
  return Polynomial::from_elements(f, std::move(coeffs));
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  j["certificate"] = to_string(v.certificate);
  if (v.witness)
    j["witness"] = v.witness->cycles();
  else
    j["witness"] = nullptr;
  j["perms_examined"] = v.perms_examined;
  j["note"] = v.note;
  return j;
}

nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["field"] = r.field_literal;
  j["k"] = r.k;
  j["n"] = r.n;
  j["candidates_total"] = r.candidates_total;
  j["candidates_after_canonicalization"] = r.candidates_after_canonicalization;
  j["lced_count"] = r.lced_count;
  j["notlced_count"] = r.notlced_count;
  j["condition_count"] = r.condition_count;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) {
    nlohmann::ordered_json e;
    e["matrix"] = format_matrix_text(c.tail);
    e["direction"] = c.direction;
    j["counterexamples"].push_back(std::move(e));
  }
  j["dets_used"] = r.dets_used;
  j["strategy"] = r.strategy;
  j["certified"] = r.certified;
  j["note"] = r.note;
  return j;
}

nlohmann::ordered_json to_json(const PiReport& r) {
  nlohmann::ordered_json j;
  j["field"] = r.field_literal;
  j["k"] = r.k;
  j["symmetric_only"] = r.symmetric_only;
  j["candidates_total"] = r.candidates_total;
  j["qualifying_count"] = r.qualifying_count;
  j["entry_sum_violations"] = nlohmann::ordered_json::array();
  for (const auto& m : r.entry_sum_violations)
    j["entry_sum_violations"].push_back(format_matrix_text(m));
  j["stronger_violations"] = nlohmann::ordered_json::array();
  for (const auto& m : r.stronger_violations)
    j["stronger_violations"].push_back(format_matrix_text(m));
  j["dets_used"] = r.dets_used;
  return j;
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["field"] = r.field_literal;
  j["k"] = r.k;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : r.items) {
    nlohmann::ordered_json e;
    e["name"] = it.name;
    e["ran"] = it.ran;
    e["checks"] = it.checks;
    e["failures"] = it.failures;
    e["note"] = it.note;
    j["items"].push_back(std::move(e));
  }
  j["all_passed"] = r.all_passed();
  return j;
}

nlohmann::ordered_json to_json(const AllLcedCertificate& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p;
  j["m"] = c.m;
  j["k"] = c.k;
  j["n"] = c.n;
  j["field"] = c.field_literal;
  j["statement"] = c.statement;
  return j;
}

nlohmann::ordered_json cyclic_report(const Polynomial& g, std::size_t n,
                                     const FieldElement& lambda,
                                     const SearchStrategy& strategy) {
  const Field f = g.field();
  CyclicSpec spec{g, n, lambda};

  nlohmann::ordered_json doc;
  doc["field"] = f.literal();
  doc["poly"] = g.str();
  doc["n"] = n;
  doc["lambda"] = lambda.str();
  doc["gcd_criterion"] = constacyclic_sufficient(spec);

  std::optional<Permutation> rec;
  std::string rec_state = "not applicable";
  if (f.characteristic() == 2 && g.degree() > 0 &&
      n == 3 * static_cast<std::size_t>(g.degree())) {
    rec = reciprocal_construction(g, n);
    rec_state = rec ? "witness found" : "absent";
  }
  doc["reciprocal_construction"] = rec_state;
  if (rec) doc["reciprocal_witness"] = rec->cycles();

  DecideOptions opt;
  opt.strategy = strategy;
  try {
    doc["verdict"] = to_json(decide(cyclic_code(spec).generator(), opt));
  } catch (const LimitReachedError& e) {
    doc["verdict"] = nullptr;
    doc["inconclusive"] = true;
    doc["perms_examined"] = e.examined;
  }
  return doc;
}

}  // namespace lced

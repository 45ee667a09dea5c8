#ifndef LCED_IO_HPP
#define LCED_IO_HPP

#include <istream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "lced/conjectures.hpp"
#include "lced/decide.hpp"
#include "lced/matrix.hpp"
#include "lced/poly.hpp"

namespace lced {

// Matrix text format: first a field literal line, then "k n", then k rows of
// n whitespace-separated entries; extension-field entries are coefficient
// tuples "c0:c1:...". '#' starts a comment; blank lines are ignored.
// Parse failures throw ParseError carrying the 1-based line number.
Matrix parse_matrix_text(std::istream& in);
Matrix parse_matrix_string(const std::string& text);
Matrix parse_matrix_file(const std::string& path);

// Inverse of parse_matrix_text.
std::string format_matrix_text(const Matrix& m);

// One entry in the matrix text format: "c" or "c0:c1:...", integers reduced
// into the field.
FieldElement parse_element(Field f, std::string_view token);

// Comma-separated coefficients, low-to-high, each in the entry format.
Polynomial parse_poly_literal(Field f, std::string_view text);

// Structured forms with stable key order. Wall-clock times are deliberately
// not serialized: structured reports are byte-deterministic.
nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const SweepReport& r);
nlohmann::ordered_json to_json(const PiReport& r);
nlohmann::ordered_json to_json(const IdentityReport& r);
nlohmann::ordered_json to_json(const AllLcedCertificate& c);

// Full constacyclic pathway in one document: the coprimality criterion, the
// reciprocal construction when it applies (characteristic 2, n = 3 deg g),
// and the final decision. A search cap that runs out leaves a null verdict
// with "inconclusive" set.
nlohmann::ordered_json cyclic_report(const Polynomial& g, std::size_t n,
                                     const FieldElement& lambda,
                                     const SearchStrategy& strategy = {});

}  // namespace lced

#endif

#ifndef LCED_DECIDE_HPP
#define LCED_DECIDE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lced/code.hpp"
#include "lced/matrix.hpp"

namespace lced {

enum class SearchOrder { identity_first, transpositions_first, full_lex, heap };

std::string to_string(SearchOrder o);
std::optional<SearchOrder> parse_search_order(const std::string& s);

struct SearchStrategy {
  SearchOrder order = SearchOrder::identity_first;
  // Cap on determinant evaluations; empty = unlimited. A certified
  // not-LCED-by-exhaustion verdict requires unlimited.
  std::optional<std::uint64_t> limit;
  // Nonzero inserts a phase of seeded random probes before the systematic
  // enumeration. Zero keeps the search fully deterministic.
  std::uint64_t seed = 0;
};

// Stable one-line description stored in reports for auditability.
std::string strategy_fingerprint(const SearchStrategy& s);

enum class Status { lced, not_lced };

enum class CertificateKind {
  identity,                 // the identity permutation is a witness
  search_witness,           // witness found by permutation search
  quick_check_nilpotent,    // block witness, A Q A^T nilpotent
  quick_check_scalar,       // block witness, A Q A^T scalar != -1
  rank_deficient,           // rows dependent, no complement possible
  theorem_011,              // zero row sums with all-ones vector in row space
  closed_form_n_k1,         // single-column tail criterion
  closed_form_k1,           // single-row criterion via duality
  closed_form_k2,           // two-row row/column-sum criterion
  constacyclic_gcd,         // coprime factor criterion
  reciprocal_construction,  // three-term product witness
  exhausted_search,         // every permutation covered, none works
};

std::string to_string(Status s);
std::string to_string(CertificateKind c);

struct Verdict {
  Status status;
  std::optional<Permutation> witness;  // present iff status == lced
  CertificateKind certificate;
  std::uint64_t perms_examined = 0;    // determinant evaluations performed
  std::string note;                    // diagnostics, e.g. fallback markers
};

// det(G P_sigma G^T); sigma permutes the n columns. The empty 0 x n case
// evaluates to one (empty determinant).
FieldElement det_gpgt(const Matrix& g, const Permutation& sigma);

struct DecideOptions {
  SearchStrategy strategy;
  bool use_necessary_condition = true;
  bool use_closed_forms = true;
  bool use_quick_sufficient = true;

  // Rank check plus raw witness search only.
  static DecideOptions pure_search(SearchStrategy s = {}) {
    DecideOptions o;
    o.strategy = s;
    o.use_necessary_condition = false;
    o.use_closed_forms = false;
    o.use_quick_sufficient = false;
    return o;
  }
};

// Exhaustive witness search with sigma/sigma^-1 pairing: det(G P Gᵗ) equals
// det(G P⁻¹ Gᵗ), so only the lexicographically smaller of each pair is
// evaluated. Throws LimitReachedError when a finite limit runs out before a
// conclusion; never certifies NotLCED under a limit.
Verdict witness_search(const Matrix& g, const SearchStrategy& strategy = {});

// True iff every row sum of G is zero and the all-ones vector lies in the
// row space; certifies NotLCED without search.
bool necessary_condition(const Matrix& g);

// Probes block witnesses diag(I_k, Q) for G = (I_k | A), with Q running over
// the identity and all transpositions: A Q A^T nilpotent, or scalar other
// than -1, makes I + A Q A^T invertible. Returns the witness on the
// (I_k | A) coordinates, or absent if no probe certifies.
std::optional<Permutation> quick_sufficient(const Matrix& a);

struct CanonicalForm {
  Matrix matrix;
  bool exact;  // false when the orbit bound was exceeded and input returned
};

// Lexicographically minimal matrix in the orbit of A under row and column
// permutations, comparing entries row-major by enumeration index.
CanonicalForm canonicalize(const Matrix& a, std::uint64_t orbit_bound = 1000000);

// Number of distinct matrices in the row x column permutation orbit of A.
std::uint64_t orbit_size(const Matrix& a);

// Layered decision pipeline: rank, then the zero-row-sum necessary
// condition, then the closed forms for n = k+1 / k = 1 / k = 2 / n-k = 2
// (the last via the dual standard form), then block quick checks, then
// exhaustive search. Every LCED witness is re-verified before returning.
Verdict decide(const Matrix& g, const DecideOptions& options = {});

// Tail column a of G = (I_k | a), n = k+1: NotLCED iff the characteristic
// divides n and every a_i = -1; otherwise a witness exists among the
// identity and the transpositions moving position k+1.
Verdict closed_form_n_k1(const std::vector<FieldElement>& a,
                         const SearchStrategy& strategy = {});

// Single-row tail a of G = (1 | a): NotLCED iff the characteristic divides n
// and every a_i = 1.
Verdict closed_form_k1(const std::vector<FieldElement>& a,
                       const SearchStrategy& strategy = {});

// Two-row tail A of G = (I_2 | A): NotLCED iff both rows of G sum to zero
// and every column of G sums to one.
Verdict closed_form_k2(const Matrix& a, const SearchStrategy& strategy = {});

// Transfers a verdict for (I_k | A) to (I_{n-k} | -A^T). The status carries
// over; an LCED witness for the transferred matrix is found by re-search.
Verdict dual_transfer(const Verdict& v, const Matrix& a,
                      const SearchStrategy& strategy = {});

// Coprimality of g with (x^n - lambda)/g. True certifies LCED; false is
// inconclusive. Throws NotADivisorError when g does not divide x^n - lambda.
bool constacyclic_sufficient(const CyclicSpec& spec);

// Characteristic-2 cyclic [3r, 2r] witness: when g g* has the three-term
// form g_0 + g(1)^2 x^r + g_0 x^{2r}, the permutation swapping the first and
// last coordinate blocks is a verified witness with determinant
// g_0^{2r} g_r^{2r}. Absent when the form does not match.
std::optional<Permutation> reciprocal_construction(const Polynomial& g,
                                                   std::size_t n);

}  // namespace lced

#endif

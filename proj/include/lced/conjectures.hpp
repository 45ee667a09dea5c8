#ifndef LCED_CONJECTURES_HPP
#define LCED_CONJECTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lced/decide.hpp"
#include "lced/matrix.hpp"

namespace lced {

struct SweepOptions {
  SearchStrategy strategy;
  bool canonical = false;
  // Total determinant-evaluation cap for the sweep. A candidate is processed
  // only while the running total is below the cap, and each single candidate
  // is additionally capped at the full budget, so the total spent is bounded
  // and independent of the worker count.
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 1;
  // Disables every decision shortcut; used to cross-validate the layered
  // pipeline against raw search.
  bool pure_search_only = false;
};

struct Counterexample {
  Matrix tail;            // the A block of (I | A)
  std::string direction;  // "notlced-but-condition-fails" or
                          // "condition-holds-but-lced"
};

// One (field, k, n) cell. Counts are orbit-weighted when canonical is set,
// so they match the unweighted full enumeration.
struct SweepReport {
  std::string field_literal;
  std::size_t k = 0;
  std::size_t n = 0;
  std::uint64_t candidates_total = 0;
  std::uint64_t candidates_after_canonicalization = 0;
  std::uint64_t lced_count = 0;
  std::uint64_t notlced_count = 0;
  // Candidates whose block has every row sum -1 and every column sum 1,
  // counted independently of any verdict.
  std::uint64_t condition_count = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t dets_used = 0;
  std::string strategy;
  // False when the budget ran out; counts then cover only the processed
  // lexicographic prefix and certify nothing.
  bool certified = true;
  std::string note;
  // Human output only; never part of the structured report.
  double wall_seconds = 0;

  bool verified() const { return certified && counterexamples.empty(); }
};

// Enumerates every A over F^{k x (n-k)} in row-major lexicographic order
// (orbit representatives when canonical), decides (I_k | A) without ever
// using the equivalence under test as a shortcut, and cross-checks the
// verdict against the row/column-sum membership condition.
SweepReport sweep_conjecture(Field f, std::size_t k, std::size_t n,
                             const SweepOptions& options = {});

struct PiOptions {
  bool symmetric_only = true;
  std::uint64_t budget = 100'000'000;  // determinant evaluations
};

struct PiReport {
  std::string field_literal;
  std::size_t k = 0;
  bool symmetric_only = true;
  std::uint64_t candidates_total = 0;
  std::uint64_t qualifying_count = 0;
  std::vector<Matrix> qualifiers;
  // Qualifiers with entry sum != -k; empty iff the sum property is verified.
  std::vector<Matrix> entry_sum_violations;
  // Qualifiers with neither all row sums -1 nor all column sums -1.
  std::vector<Matrix> stronger_violations;
  std::uint64_t dets_used = 0;
  double wall_seconds = 0;

  bool verified() const {
    return entry_sum_violations.empty() && stronger_violations.empty();
  }
};

// Enumerates k x k matrices M (symmetric ones only under the flag), keeps
// those where every row-permuted copy of M has eigenvalue -1, i.e.
// det(I + P M) = 0 for all permutation matrices P, and checks each keeper
// for entry sum -k and for the stronger all-row-sums or all-column-sums -1
// property. Throws BudgetExceededError when the determinant cap runs out.
PiReport verify_pi_k(Field f, std::size_t k, const PiOptions& options = {});

struct IdentityOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  // Candidate cap for the qualifier item, which re-enumerates the symmetric
  // matrices; the item is skipped (ran = false) beyond the cap.
  std::uint64_t qualifier_budget = 4'200'000;
  std::uint64_t qualifier_det_budget = 400'000'000;
};

struct IdentityItem {
  std::string name;
  bool ran = false;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string note;
};

struct IdentityReport {
  std::string field_literal;  // "Z" for the exact-integer mode
  std::size_t k = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<IdentityItem> items;

  bool all_passed() const {
    for (const auto& it : items)
      if (it.failures != 0) return false;
    return true;
  }
};

// Exercises the permutation-sum identities for S_k, k <= 7:
//   even-odd-sum   : sum of P over the even permutations equals the sum over
//                    the odd ones, both ((k-1)!/2) * ones, k >= 3, exact
//                    integers
//   signed-sum     : sum of det(P) * P vanishes, k >= 3, exact integers
//   trace-sum      : sum over pi of trace(P_pi A) = (k-1)! * (entry sum of A)
//   minor-sum      : sum over pi of delta_r(P_pi A) = 0 for r = 2..k, by
//                    direct minor enumeration
//   charpoly-sum   : sum over pi of charpoly(P_pi A)
//                    = k! x^k - (k-1)! (entry sum of A) x^(k-1)
//   identity-input : A = I via the cycle-type product formula and via
//                    elimination, both equal to k! (x^k - x^(k-1))
//   qualifier-sum  : (k-1)! (k + entry sum of M) = 0 for every matrix kept
//                    by verify_pi_k (field mode only)
// The randomized items draw `trials` matrices from the seed.
IdentityReport identity_suite(Field f, std::size_t k,
                              const IdentityOptions& options = {});
IdentityReport identity_suite_integers(std::size_t k,
                                       const IdentityOptions& options = {});

// For a certified non-complementable (I_k | A) over a field where the
// eigenvalue condition holds for both k and n-k: true iff the column sums of
// A share one value b with (n-k) b^2 = -k and the row sums share one value a
// with k a^2 = -(n-k). Throws PreconditionUnmetError when k < 2, the shape
// disagrees with (n, k), or (I | A) is decidably complementable.
bool alpha_beta_check(const Matrix& a, std::size_t n, std::size_t k);

struct AllLcedCertificate {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::string field_literal;
  std::string statement;
};

// Quadratic-residue certificate: for odd prime p >= k, odd m, and n - k
// nonzero mod p, if -k/(n-k) is a nonsquare mod p then every [n, k] code
// over the order-p^m field is LCED. Absent when inconclusive (including
// p = 2, even m, p < k, or p dividing n - k). Throws PreconditionUnmetError
// for malformed input: p not prime, m = 0, k < 2, or n <= k.
std::optional<AllLcedCertificate> all_lced_certificate(std::uint64_t p,
                                                       std::uint64_t m,
                                                       std::size_t k,
                                                       std::size_t n);

}  // namespace lced

#endif

#ifndef LCED_CODE_HPP
#define LCED_CODE_HPP

#include <cstdint>
#include <vector>

#include "lced/matrix.hpp"
#include "lced/poly.hpp"

namespace lced {

// Linear [n, k] code, identified by its row space. The generator is kept as
// given; equality and membership go through the RREF canonical form.
class LinearCode {
 public:
  // Throws RankDeficientError unless the rows are independent.
  static LinearCode from_generator(const Matrix& g);

  Field field() const { return gen_.field(); }
  std::size_t length() const { return gen_.cols(); }
  std::size_t dimension() const { return gen_.rows(); }
  const Matrix& generator() const { return gen_; }
  const Matrix& rref_generator() const { return rref_; }

  bool contains(const std::vector<FieldElement>& word) const;
  bool operator==(const LinearCode& o) const { return rref_ == o.rref_; }
  bool operator!=(const LinearCode& o) const { return !(*this == o); }

 private:
  LinearCode(Matrix gen, Matrix rref) : gen_(std::move(gen)), rref_(std::move(rref)) {}
  Matrix gen_;
  Matrix rref_;
};

// Null space of the generator, computed by elimination.
LinearCode dual(const LinearCode& c);

// True iff dim C + dim D = n and G_C H^T is invertible for H a generator of
// dual(D); equivalent to C ∩ D = 0 and C + D = F^n.
bool is_lcp(const LinearCode& c, const LinearCode& d);

struct EMembership {
  bool in_code;
  bool in_dual;
};

// Membership of the all-ones vector in C and in its dual. The dual test is
// the row-sum criterion: e ⊥ C iff every generator row sums to zero.
EMembership e_membership(const LinearCode& c);

// Constacyclic code data: the ideal generated by g in F[x]/(x^n - lambda).
struct CyclicSpec {
  Polynomial g;
  std::size_t n;
  FieldElement lambda;
};

// Generator rows are the shifts x^i g for i < n - deg g; no twisted wraparound
// occurs at those degrees. Throws NotADivisorError unless g | x^n - lambda.
LinearCode cyclic_code(const CyclicSpec& spec);

struct ToeplitzBlocks {
  Matrix upper;  // diagonal g_0
  Matrix lower;  // diagonal g_r
};

// The r x r triangular blocks of the shift generator: upper[i][j] = g_{j-i},
// lower[i][j] = g_{r+j-i}. Throws DegreeMismatchError unless deg g = r.
ToeplitzBlocks toeplitz_blocks(const Polynomial& g, std::size_t r);

// Minimum Hamming weight over nonzero codewords by full enumeration.
// Throws BudgetExceededError when q^k exceeds the codeword budget.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = 1ull << 24);

// min(d(C), d(dual(D))) for an LCP pair; throws NotLcpError otherwise.
std::size_t security_parameter(const LinearCode& c, const LinearCode& d,
                               std::uint64_t budget = 1ull << 24);

}  // namespace lced

#endif

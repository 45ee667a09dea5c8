#include "lced/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "lced/detail/charpoly.hpp"
#include "lced/detail/field_rep.hpp"
#include "lced/detail/minors.hpp"
#include "lced/detail/rng.hpp"
#include "lced/errors.hpp"

namespace lced {

namespace {

using detail::FieldRep;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t pow_sat(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kSaturated / q) return kSaturated;
    r *= q;
  }
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Row-major digits of idx, entry (0,0) most significant, one digit per
// element enumeration index.
Matrix tail_from_index(Field f, std::size_t k, std::size_t m, std::uint64_t idx) {
  Matrix a(f, k, m);
  const std::uint64_t q = f.order();
  for (std::size_t e = k * m; e-- > 0;) {
    a.at(e / m, e % m) = f.from_index(idx % q);
    idx /= q;
  }
  return a;
}

// All of G = (I | A) has zero row sums and the all-ones vector in its row
// space, phrased directly on the block.
bool membership_condition(const Matrix& a) {
  Field f = a.field();
  const FieldElement minus_one = -f.one();
  const FieldElement one = f.one();
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a.row_sum(i) != minus_one) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.col_sum(j) != one) return false;
  return true;
}

struct CandidateResult {
  std::uint64_t index = 0;
  Status status = Status::lced;
  std::uint64_t dets = 0;
  bool condition = false;
  bool limited = false;
  std::uint64_t weight = 1;  // orbit size; 0 marks a skipped non-representative
};

CandidateResult process_candidate(Field f, std::size_t k, std::size_t m,
                                  std::uint64_t idx, const SweepOptions& opt) {
  CandidateResult r;
  r.index = idx;
  Matrix a = tail_from_index(f, k, m, idx);
  if (opt.canonical) {
    CanonicalForm cf = canonicalize(a);
    if (!cf.exact)
      throw PreconditionUnmetError("orbit too large for a canonical sweep");
    if (cf.matrix != a) {
      r.weight = 0;
      return r;
    }
    r.weight = orbit_size(a);
  }
  r.condition = membership_condition(a);

  DecideOptions dopt;
  dopt.strategy = opt.strategy;
  if (opt.pure_search_only) {
    dopt.use_necessary_condition = false;
    dopt.use_closed_forms = false;
    dopt.use_quick_sufficient = false;
  }
  std::uint64_t cap = opt.budget;
  if (dopt.strategy.limit && *dopt.strategy.limit < cap)
    cap = *dopt.strategy.limit;
  dopt.strategy.limit = cap;

  Matrix g = Matrix::identity(f, k).hstack(a);
  try {
    Verdict v = decide(g, dopt);
    r.status = v.status;
    r.dets = v.perms_examined;
  } catch (const LimitReachedError& e) {
    r.limited = true;
    r.dets = e.examined;
  }
  return r;
}

}  // namespace

SweepReport sweep_conjecture(Field f, std::size_t k, std::size_t n,
                             const SweepOptions& opt) {
  if (n < k) throw ShapeMismatchError("length below dimension");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = n - k;

  SweepReport rep;
  rep.field_literal = f.literal();
  rep.k = k;
  rep.n = n;
  rep.candidates_total = pow_sat(f.order(), k * m);
  {
    std::ostringstream os;
    os << strategy_fingerprint(opt.strategy) << ";canonical=" << opt.canonical
       << ";pure=" << opt.pure_search_only;
    rep.strategy = os.str();
  }
  if (rep.candidates_total == kSaturated || rep.candidates_total > opt.budget)
    throw BudgetExceededError("candidate space exceeds the sweep budget");

  const std::uint64_t total = rep.candidates_total;
  constexpr std::uint64_t kChunk = 1024;
  const unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
  std::vector<CandidateResult> results;
  std::uint64_t used = 0;
  bool stopped = false;

  for (std::uint64_t start = 0; start < total && !stopped; start += kChunk) {
    const std::uint64_t end = std::min(total, start + kChunk);
    results.assign(end - start, CandidateResult{});
    if (jobs <= 1 || end - start == 1) {
      for (std::uint64_t i = start; i < end; ++i)
        results[i - start] = process_candidate(f, k, m, i, opt);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errs(jobs);
      const std::uint64_t span = end - start;
      for (unsigned w = 0; w < jobs; ++w) {
        const std::uint64_t lo = start + span * w / jobs;
        const std::uint64_t hi = start + span * (w + 1) / jobs;
        pool.emplace_back([&, w, lo, hi] {
          try {
            for (std::uint64_t i = lo; i < hi; ++i)
              results[i - start] = process_candidate(f, k, m, i, opt);
          } catch (...) {
            errs[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    }

    // Deterministic in-order merge; the budget is checked between
    // candidates, so the outcome is identical for any worker count.
    for (const auto& c : results) {
      if (c.weight == 0) continue;
      if (used >= opt.budget) {
        rep.certified = false;
        rep.note = "determinant budget exhausted";
        stopped = true;
        break;
      }
      used += c.dets;
      if (c.limited) {
        rep.certified = false;
        rep.note = "candidate hit the per-candidate evaluation cap";
        stopped = true;
        break;
      }
      ++rep.candidates_after_canonicalization;
      if (c.status == Status::lced)
        rep.lced_count += c.weight;
      else
        rep.notlced_count += c.weight;
      if (c.condition) rep.condition_count += c.weight;
      const bool mismatch =
          (c.status == Status::not_lced && !c.condition) ||
          (c.status == Status::lced && c.condition);
      if (mismatch) {
        Counterexample ce{tail_from_index(f, k, m, c.index),
                          c.status == Status::not_lced
                              ? "notlced-but-condition-fails"
                              : "condition-holds-but-lced"};
        rep.counterexamples.push_back(std::move(ce));
      }
    }
  }

  rep.dets_used = used;
  rep.wall_seconds = seconds_since(t0);
  return rep;
}

namespace {

// In-place determinant of a k x k matrix of packed codes; destroys b.
std::uint64_t det_codes(const FieldRep* rep, std::uint64_t* b, std::size_t k) {
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = k;
    for (std::size_t i = c; i < k; ++i)
      if (b[i * k + c] != 0) {
        sel = i;
        break;
      }
    if (sel == k) return 0;
    if (sel != c) {
      for (std::size_t j = c; j < k; ++j) std::swap(b[sel * k + j], b[c * k + j]);
      det = rep->neg(det);
    }
    const std::uint64_t piv = b[c * k + c];
    det = rep->mul(det, piv);
    const std::uint64_t pi = rep->inv(piv);
    for (std::size_t i = c + 1; i < k; ++i) {
      const std::uint64_t fr = rep->mul(b[i * k + c], pi);
      if (fr == 0) continue;
      for (std::size_t j = c; j < k; ++j)
        b[i * k + j] = rep->sub(b[i * k + j], rep->mul(fr, b[c * k + j]));
    }
  }
  return det;
}

struct PermTable {
  std::size_t k = 0;
  std::size_t count = 0;
  std::vector<std::uint32_t> img;  // count x k, sigma(j) at [p*k + j]
  std::vector<std::uint32_t> inv;  // count x k
  std::vector<std::uint8_t> odd;   // parity
};

PermTable make_perm_table(std::size_t k) {
  PermTable t;
  t.k = k;
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (std::size_t j = 0; j < k; ++j) t.img.push_back(p[j]);
    for (std::size_t j = 0; j < k; ++j) t.inv.push_back(0);
    std::uint32_t* inv = t.inv.data() + t.inv.size() - k;
    for (std::size_t j = 0; j < k; ++j) inv[p[j]] = static_cast<std::uint32_t>(j);
    unsigned inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += p[i] > p[j];
    t.odd.push_back(inversions & 1);
    ++t.count;
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

}  // namespace

PiReport verify_pi_k(Field f, std::size_t k, const PiOptions& opt) {
  if (k == 0 || k > 7) throw PreconditionUnmetError("k must be in 1..7");
  const auto t0 = std::chrono::steady_clock::now();
  const FieldRep* rep = detail::rep_of(f);
  const std::uint64_t q = f.order();

  PiReport rep_out;
  rep_out.field_literal = f.literal();
  rep_out.k = k;
  rep_out.symmetric_only = opt.symmetric_only;

  // Entry slots, symmetric candidates mirrored across the diagonal.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = opt.symmetric_only ? i : 0; j < k; ++j)
      slots.emplace_back(i, j);
  const std::size_t d = slots.size();
  rep_out.candidates_total = pow_sat(q, d);
  if (rep_out.candidates_total == kSaturated ||
      rep_out.candidates_total > opt.budget)
    throw BudgetExceededError("candidate space exceeds the budget");

  PermTable pt = make_perm_table(k);
  std::vector<std::uint64_t> digits(d, 0);
  std::vector<std::uint64_t> mcodes(k * k, 0);
  std::vector<std::uint64_t> b(k * k);
  const std::uint64_t minus_one = rep->neg(1);
  std::uint64_t minus_k = 0;
  for (std::size_t i = 0; i < k; ++i) minus_k = rep->add(minus_k, minus_one);

  for (std::uint64_t cand = 0; cand < rep_out.candidates_total; ++cand) {
    for (std::size_t s = 0; s < d; ++s) {
      const auto [i, j] = slots[s];
      mcodes[i * k + j] = digits[s];
      if (opt.symmetric_only) mcodes[j * k + i] = digits[s];
    }

    bool qualifies = true;
    for (std::size_t pi = 0; pi < pt.count && qualifies; ++pi) {
      const std::uint32_t* inv = pt.inv.data() + pi * k;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          std::uint64_t v = mcodes[inv[i] * k + j];
          if (i == j) v = rep->add(v, 1);
          b[i * k + j] = v;
        }
      if (++rep_out.dets_used > opt.budget)
        throw BudgetExceededError("determinant budget exceeded");
      qualifies = det_codes(rep, b.data(), k) == 0;
    }

    if (qualifies) {
      ++rep_out.qualifying_count;
      Matrix mm(f, k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          mm.at(i, j) = f.from_index(mcodes[i * k + j]);
      rep_out.qualifiers.push_back(mm);

      std::uint64_t sum = 0;
      for (std::size_t e = 0; e < k * k; ++e) sum = rep->add(sum, mcodes[e]);
      if (sum != minus_k) rep_out.entry_sum_violations.push_back(mm);

      bool rows = true, cols = true;
      for (std::size_t i = 0; i < k && (rows || cols); ++i) {
        std::uint64_t rs = 0, cs = 0;
        for (std::size_t j = 0; j < k; ++j) {
          rs = rep->add(rs, mcodes[i * k + j]);
          cs = rep->add(cs, mcodes[j * k + i]);
        }
        if (rs != minus_one) rows = false;
        if (cs != minus_one) cols = false;
      }
      if (!rows && !cols) rep_out.stronger_violations.push_back(mm);
    }

    for (std::size_t s = d; s-- > 0;) {
      if (++digits[s] < q) break;
      digits[s] = 0;
    }
  }

  rep_out.wall_seconds = seconds_since(t0);
  return rep_out;
}

namespace {

// Integer-only items: the even/odd permutation-matrix sums and the signed
// sum, fixed statements about S_k itself.
void run_counting_items(const PermTable& pt, std::size_t k,
                        std::vector<IdentityItem>& items) {
  IdentityItem even_odd{"even-odd-sum", false, 0, 0, ""};
  IdentityItem signed_sum{"signed-sum", false, 0, 0, ""};
  if (k < 3) {
    even_odd.note = "requires k >= 3";
    signed_sum.note = "requires k >= 3";
  } else {
    std::vector<long long> even(k * k, 0), odd(k * k, 0), sgn(k * k, 0);
    for (std::size_t pi = 0; pi < pt.count; ++pi) {
      const std::uint32_t* img = pt.img.data() + pi * k;
      auto& bucket = pt.odd[pi] ? odd : even;
      const long long s = pt.odd[pi] ? -1 : 1;
      for (std::size_t j = 0; j < k; ++j) {
        bucket[img[j] * k + j] += 1;
        sgn[img[j] * k + j] += s;
      }
    }
    const long long half = static_cast<long long>(factorial(k - 1) / 2);
    even_odd.ran = true;
    even_odd.checks = 1;
    for (std::size_t e = 0; e < k * k; ++e)
      if (even[e] != half || odd[e] != half) {
        even_odd.failures = 1;
        break;
      }
    signed_sum.ran = true;
    signed_sum.checks = 1;
    for (std::size_t e = 0; e < k * k; ++e)
      if (sgn[e] != 0) {
        signed_sum.failures = 1;
        break;
      }
  }
  items.push_back(std::move(even_odd));
  items.push_back(std::move(signed_sum));
}

template <class Ops>
typename Ops::S scalar_of(const Ops& ops, std::uint64_t c) {
  typename Ops::S s = ops.zero();
  for (std::uint64_t i = 0; i < c; ++i) s = ops.add(s, ops.one());
  return s;
}

// Product over the cycles of pi of (x^len - 1), low-to-high coefficients.
template <class Ops>
std::vector<typename Ops::S> cycle_type_charpoly(const Ops& ops,
                                                 const std::uint32_t* img,
                                                 std::size_t k) {
  using S = typename Ops::S;
  std::vector<S> poly{ops.one()};
  std::vector<bool> seen(k, false);
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::size_t len = 0, j = s;
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    std::vector<S> factor(len + 1, ops.zero());
    factor[0] = ops.neg(ops.one());
    factor[len] = ops.one();
    std::vector<S> next(poly.size() + len, ops.zero());
    for (std::size_t a = 0; a < poly.size(); ++a) {
      if (ops.is_zero(poly[a])) continue;
      for (std::size_t b = 0; b < factor.size(); ++b)
        next[a + b] = ops.add(next[a + b], ops.mul(poly[a], factor[b]));
    }
    poly = std::move(next);
  }
  return poly;
}

// The randomized trace/minor/charpoly items plus the deterministic A = I
// cross-check, shared by the field and the exact-integer modes.
template <class Ops, class Draw>
void run_randomized_items(const Ops& ops, const PermTable& pt, std::size_t k,
                          const IdentityOptions& opt, Draw draw,
                          std::vector<IdentityItem>& items) {
  using S = typename Ops::S;
  detail::SplitMix64 rng(opt.seed);
  const S fact_k = scalar_of(ops, factorial(k));
  const S fact_k1 = scalar_of(ops, factorial(k - 1));

  std::vector<S> a(k * k), m(k * k);
  auto draw_matrix = [&] {
    for (auto& e : a) e = draw(rng);
  };
  auto entry_sum = [&] {
    S s = ops.zero();
    for (const auto& e : a) s = ops.add(s, e);
    return s;
  };
  auto permuted_rows = [&](std::size_t pi) {
    const std::uint32_t* inv = pt.inv.data() + pi * k;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] = a[inv[i] * k + j];
  };

  IdentityItem trace_item{"trace-sum", true, 0, 0, ""};
  IdentityItem minor_item{"minor-sum", true, 0, 0, ""};
  IdentityItem cp_item{"charpoly-sum", true, 0, 0, ""};

  detail::CharPolyEngine<Ops> engine(ops);
  std::vector<S> cp(k + 1), acc(k + 1);
  std::vector<S> minor_acc(k + 1);

  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    draw_matrix();
    const S total = entry_sum();

    // trace route
    S lhs = ops.zero();
    for (std::size_t pi = 0; pi < pt.count; ++pi) {
      const std::uint32_t* img = pt.img.data() + pi * k;
      for (std::size_t c = 0; c < k; ++c)
        lhs = ops.add(lhs, a[c * k + img[c]]);
    }
    ++trace_item.checks;
    if (lhs != ops.mul(fact_k1, total)) ++trace_item.failures;

    // minor-enumeration route, r = 2..k
    for (std::size_t r = 2; r <= k; ++r) minor_acc[r] = ops.zero();
    for (std::size_t pi = 0; pi < pt.count; ++pi) {
      permuted_rows(pi);
      for (std::size_t r = 2; r <= k; ++r)
        minor_acc[r] = ops.add(
            minor_acc[r], detail::principal_minor_sum(ops, m.data(), k, r));
    }
    for (std::size_t r = 2; r <= k; ++r) {
      ++minor_item.checks;
      if (!ops.is_zero(minor_acc[r])) ++minor_item.failures;
    }

    // characteristic-polynomial route
    for (auto& e : acc) e = ops.zero();
    for (std::size_t pi = 0; pi < pt.count; ++pi) {
      permuted_rows(pi);
      engine.run(m.data(), k, cp.data());
      for (std::size_t i = 0; i <= k; ++i) acc[i] = ops.add(acc[i], cp[i]);
    }
    ++cp_item.checks;
    bool ok = acc[k] == fact_k &&
              acc[k - 1] == ops.neg(ops.mul(fact_k1, total));
    for (std::size_t i = 0; i + 1 < k && ok; ++i) ok = ops.is_zero(acc[i]);
    if (!ok) ++cp_item.failures;
  }
  items.push_back(std::move(trace_item));
  items.push_back(std::move(minor_item));
  items.push_back(std::move(cp_item));

  // A = I: elimination route and the cycle-type product route must both give
  // k! (x^k - x^(k-1)).
  IdentityItem ident{"identity-input", true, 2, 0, ""};
  for (std::size_t e = 0; e < k * k; ++e)
    a[e] = e % (k + 1) == 0 ? ops.one() : ops.zero();
  std::vector<S> route1(k + 1, ops.zero()), route2(k + 1, ops.zero());
  for (std::size_t pi = 0; pi < pt.count; ++pi) {
    permuted_rows(pi);
    engine.run(m.data(), k, cp.data());
    for (std::size_t i = 0; i <= k; ++i) route1[i] = ops.add(route1[i], cp[i]);
    auto cyc = cycle_type_charpoly(ops, pt.img.data() + pi * k, k);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      route2[i] = ops.add(route2[i], cyc[i]);
  }
  auto matches_closed_form = [&](const std::vector<S>& r) {
    bool ok = r[k] == fact_k && r[k - 1] == ops.neg(fact_k);
    for (std::size_t i = 0; i + 1 < k && ok; ++i) ok = ops.is_zero(r[i]);
    return ok;
  };
  if (!matches_closed_form(route1)) ++ident.failures;
  if (!matches_closed_form(route2)) ++ident.failures;
  items.push_back(std::move(ident));
}

}  // namespace

IdentityReport identity_suite(Field f, std::size_t k,
                              const IdentityOptions& opt) {
  if (k < 2 || k > 7)
    throw PreconditionUnmetError("k must be in 2..7");
  IdentityReport rep;
  rep.field_literal = f.literal();
  rep.k = k;
  rep.trials = opt.trials;
  rep.seed = opt.seed;

  PermTable pt = make_perm_table(k);
  run_counting_items(pt, k, rep.items);

  const FieldRep* frep = detail::rep_of(f);
  detail::FieldCodeOps ops{frep};
  const std::uint64_t q = f.order();
  run_randomized_items(
      ops, pt, k, opt,
      [q](detail::SplitMix64& rng) { return rng.below(q); }, rep.items);

  IdentityItem qual{"qualifier-sum", false, 0, 0, ""};
  const std::size_t d = k * (k + 1) / 2;
  if (pow_sat(q, d) > opt.qualifier_budget) {
    qual.note = "qualifier space exceeds the budget";
  } else {
    try {
      PiOptions popt;
      popt.symmetric_only = true;
      popt.budget = opt.qualifier_det_budget;
      PiReport pr = verify_pi_k(f, k, popt);
      qual.ran = true;
      const FieldElement fact = f.element(static_cast<std::int64_t>(
          factorial(k - 1) % f.characteristic()));
      const FieldElement kk = f.element(static_cast<std::int64_t>(k));
      for (const auto& mq : pr.qualifiers) {
        ++qual.checks;
        if (!(fact * (kk + mq.entry_sum())).is_zero()) ++qual.failures;
      }
    } catch (const BudgetExceededError&) {
      qual.ran = false;
      qual.note = "determinant budget exceeded";
    }
  }
  rep.items.push_back(std::move(qual));
  return rep;
}

IdentityReport identity_suite_integers(std::size_t k,
                                       const IdentityOptions& opt) {
  if (k < 2 || k > 7)
    throw PreconditionUnmetError("k must be in 2..7");
  IdentityReport rep;
  rep.field_literal = "Z";
  rep.k = k;
  rep.trials = opt.trials;
  rep.seed = opt.seed;

  PermTable pt = make_perm_table(k);
  run_counting_items(pt, k, rep.items);

  detail::IntOps ops;
  run_randomized_items(
      ops, pt, k, opt,
      [](detail::SplitMix64& rng) {
        return static_cast<long long>(rng.below(9)) - 4;
      },
      rep.items);

  IdentityItem qual{"qualifier-sum", false, 0, 0, "field mode only"};
  rep.items.push_back(std::move(qual));
  return rep;
}

bool alpha_beta_check(const Matrix& a, std::size_t n, std::size_t k) {
  if (k < 2) throw PreconditionUnmetError("k must be at least 2");
  if (a.rows() != k || a.cols() + k != n)
    throw ShapeMismatchError("block shape disagrees with (n, k)");
  Field f = a.field();
  Matrix g = Matrix::identity(f, k).hstack(a);
  if (decide(g).status == Status::lced)
    throw PreconditionUnmetError(
        "input decides complementable; the check applies to certified "
        "non-complementable matrices");

  const std::size_t m = n - k;
  const FieldElement kf = f.element(static_cast<std::int64_t>(k));
  const FieldElement mf = f.element(static_cast<std::int64_t>(m));

  FieldElement beta = a.col_sum(0);
  for (std::size_t j = 1; j < a.cols(); ++j)
    if (a.col_sum(j) != beta) return false;
  if (mf * beta * beta != -kf) return false;

  FieldElement alpha = a.row_sum(0);
  for (std::size_t i = 1; i < a.rows(); ++i)
    if (a.row_sum(i) != alpha) return false;
  return kf * alpha * alpha == -mf;
}

std::optional<AllLcedCertificate> all_lced_certificate(std::uint64_t p,
                                                       std::uint64_t m,
                                                       std::size_t k,
                                                       std::size_t n) {
  if (m == 0) throw PreconditionUnmetError("extension degree must be positive");
  if (k < 2) throw PreconditionUnmetError("dimension must be at least 2");
  if (n <= k) throw PreconditionUnmetError("length must exceed the dimension");

  std::optional<Field> fp;
  try {
    fp = Field::prime(p);
  } catch (const NonPrimeError&) {
    throw PreconditionUnmetError("p must be prime");
  }
  if (p == 2) return std::nullopt;        // no quadratic-residue argument
  if (m % 2 == 0) return std::nullopt;    // squares collapse in even degree
  if (p < k) return std::nullopt;         // eigenvalue condition unavailable
  if ((n - k) % p == 0) return std::nullopt;

  const FieldElement t = -(fp->element(static_cast<std::int64_t>(k % p)) /
                           fp->element(static_cast<std::int64_t>((n - k) % p)));
  if (quadratic_character(t) != QuadraticCharacter::nonsquare)
    return std::nullopt;

  AllLcedCertificate cert;
  cert.p = p;
  cert.m = m;
  cert.k = k;
  cert.n = n;
  cert.field_literal =
      m == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(m);
  const std::uint64_t q = pow_sat(p, m);
  std::ostringstream os;
  os << "every [" << n << "," << k << "] code over the field of order ";
  if (q == kSaturated)
    os << p << "^" << m;
  else
    os << q;
  os << " is LCED";
  cert.statement = os.str();
  return cert;
}

}  // namespace lced

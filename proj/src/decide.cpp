#include "lced/decide.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lced/detail/charpoly.hpp"
#include "lced/detail/field_rep.hpp"
#include "lced/detail/rng.hpp"

namespace lced {

std::string to_string(SearchOrder o) {
  switch (o) {
    case SearchOrder::identity_first: return "identity-first";
    case SearchOrder::transpositions_first: return "transpositions-first";
    case SearchOrder::full_lex: return "full-lex";
    case SearchOrder::heap: return "heap";
  }
  return "?";
}

std::optional<SearchOrder> parse_search_order(const std::string& s) {
  if (s == "identity-first") return SearchOrder::identity_first;
  if (s == "transpositions-first") return SearchOrder::transpositions_first;
  if (s == "full-lex") return SearchOrder::full_lex;
  if (s == "heap") return SearchOrder::heap;
  return std::nullopt;
}

std::string strategy_fingerprint(const SearchStrategy& s) {
  std::ostringstream os;
  os << "order=" << to_string(s.order) << ";limit=";
  if (s.limit)
    os << *s.limit;
  else
    os << "unlimited";
  os << ";seed=" << s.seed;
  return os.str();
}

std::string to_string(Status s) {
  return s == Status::lced ? "LCED" : "NotLCED";
}

std::string to_string(CertificateKind c) {
  switch (c) {
    case CertificateKind::identity: return "Identity";
    case CertificateKind::search_witness: return "SearchWitness";
    case CertificateKind::quick_check_nilpotent: return "QuickCheck(nilpotent)";
    case CertificateKind::quick_check_scalar: return "QuickCheck(scalar)";
    case CertificateKind::rank_deficient: return "RankDeficient";
    case CertificateKind::theorem_011: return "Theorem011";
    case CertificateKind::closed_form_n_k1: return "ClosedFormN_K1";
    case CertificateKind::closed_form_k1: return "ClosedFormK1";
    case CertificateKind::closed_form_k2: return "ClosedFormK2";
    case CertificateKind::constacyclic_gcd: return "ConstacyclicGcd";
    case CertificateKind::reciprocal_construction: return "ReciprocalConstruction";
    case CertificateKind::exhausted_search: return "ExhaustedSearch";
  }
  return "?";
}

namespace {

// Reusable evaluator of det(G P_sigma G^T) on packed codes.
class GramDet {
 public:
  explicit GramDet(const Matrix& g)
      : rep_(detail::rep_of(g.field())),
        k_(g.rows()),
        n_(g.cols()),
        gc_(k_ * n_),
        b_(k_ * k_) {
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < n_; ++j) gc_[i * n_ + j] = g.at(i, j).index();
  }

  // img[j] = sigma(j), 0-based.
  std::uint64_t det(const std::uint32_t* img) {
    const std::size_t k = k_, n = n_;
    for (std::size_t a = 0; a < k; ++a) {
      const std::uint64_t* ra = gc_.data() + a * n;
      for (std::size_t b = 0; b < k; ++b) {
        const std::uint64_t* rb = gc_.data() + b * n;
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n; ++j)
          acc = rep_->add(acc, rep_->mul(ra[img[j]], rb[j]));
        b_[a * k + b] = acc;
      }
    }
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t sel = k;
      for (std::size_t i = c; i < k; ++i)
        if (b_[i * k + c] != 0) {
          sel = i;
          break;
        }
      if (sel == k) return 0;
      if (sel != c) {
        for (std::size_t j = c; j < k; ++j)
          std::swap(b_[sel * k + j], b_[c * k + j]);
        det = rep_->neg(det);
      }
      std::uint64_t piv = b_[c * k + c];
      det = rep_->mul(det, piv);
      std::uint64_t pi = rep_->inv(piv);
      for (std::size_t i = c + 1; i < k; ++i) {
        std::uint64_t f = b_[i * k + c];
        if (f == 0) continue;
        std::uint64_t fr = rep_->mul(f, pi);
        for (std::size_t j = c; j < k; ++j)
          b_[i * k + j] = rep_->sub(b_[i * k + j], rep_->mul(fr, b_[c * k + j]));
      }
    }
    return det;
  }

 private:
  const detail::FieldRep* rep_;
  std::size_t k_, n_;
  std::vector<std::uint64_t> gc_, b_;
};

Permutation perm_from_img(const std::vector<std::uint32_t>& img) {
  std::vector<std::size_t> images(img.size());
  for (std::size_t j = 0; j < img.size(); ++j) images[j] = img[j] + 1;
  return Permutation::from_images(images);
}

Verdict not_lced_verdict(CertificateKind cert, std::uint64_t perms,
                         std::string note = {}) {
  Verdict v;
  v.status = Status::not_lced;
  v.certificate = cert;
  v.perms_examined = perms;
  v.note = std::move(note);
  return v;
}

}  // namespace

FieldElement det_gpgt(const Matrix& g, const Permutation& sigma) {
  if (sigma.size() != g.cols()) throw ShapeMismatchError("permutation size");
  GramDet gram(g);
  std::vector<std::uint32_t> img(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j)
    img[j] = static_cast<std::uint32_t>(sigma.apply(j));
  return g.field().from_index(gram.det(img.data()));
}

Verdict witness_search(const Matrix& g, const SearchStrategy& strat) {
  const std::size_t k = g.rows(), n = g.cols();
  GaussResult gr = gauss(g);
  if (gr.rank < k)
    return not_lced_verdict(CertificateKind::rank_deficient, 0,
                            "rank " + std::to_string(gr.rank));

  GramDet gram(g);
  std::uint64_t count = 0;
  std::vector<std::uint32_t> img(n);
  auto eval = [&]() -> std::uint64_t {
    if (strat.limit && count >= *strat.limit) throw LimitReachedError(count);
    ++count;
    return gram.det(img.data());
  };
  auto lced_here = [&]() {
    Verdict v;
    v.status = Status::lced;
    v.witness = perm_from_img(img);
    v.certificate = v.witness->is_identity() ? CertificateKind::identity
                                             : CertificateKind::search_witness;
    v.perms_examined = count;
    return v;
  };

  const bool pre_phases = strat.order == SearchOrder::identity_first ||
                          strat.order == SearchOrder::transpositions_first;

  auto try_identity = [&]() -> bool {
    std::iota(img.begin(), img.end(), 0);
    return eval() != 0;
  };
  auto try_transpositions = [&]() -> bool {
    for (std::size_t a = 0; a + 1 < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[a], img[b]);
        if (eval() != 0) return true;
      }
    return false;
  };
  auto try_probes = [&]() -> bool {
    if (strat.seed == 0) return false;
    detail::SplitMix64 rng(strat.seed);
    for (std::size_t t = 0; t < n * n; ++t) {
      std::iota(img.begin(), img.end(), 0);
      rng.shuffle(img.begin(), img.end());
      if (eval() != 0) return true;
    }
    return false;
  };

  if (strat.order == SearchOrder::identity_first) {
    if (try_identity()) return lced_here();
    if (try_transpositions()) return lced_here();
    if (try_probes()) return lced_here();
  } else if (strat.order == SearchOrder::transpositions_first) {
    if (try_transpositions()) return lced_here();
    if (try_identity()) return lced_here();
    if (try_probes()) return lced_here();
  } else {
    if (try_probes()) return lced_here();
  }

  // Systematic phase. Skip anything the early phases already evaluated, and
  // of each sigma != sigma^-1 pair evaluate only the lexicographically
  // smaller member.
  std::vector<std::uint32_t> inv(n);
  auto should_eval = [&]() -> bool {
    if (pre_phases) {
      std::size_t moved = 0;
      for (std::size_t j = 0; j < n; ++j) moved += img[j] != j;
      if (moved <= 2) return false;
    }
    for (std::size_t j = 0; j < n; ++j) inv[img[j]] = static_cast<std::uint32_t>(j);
    for (std::size_t j = 0; j < n; ++j) {
      if (img[j] != inv[j]) return img[j] < inv[j];
    }
    return true;
  };

  if (strat.order == SearchOrder::heap) {
    std::iota(img.begin(), img.end(), 0);
    if (should_eval() && eval() != 0) return lced_here();
    std::vector<std::size_t> c(n, 0);
    std::size_t i = 0;
    while (i < n) {
      if (c[i] < i) {
        if (i % 2 == 0)
          std::swap(img[0], img[i]);
        else
          std::swap(img[c[i]], img[i]);
        if (should_eval() && eval() != 0) return lced_here();
        ++c[i];
        i = 0;
      } else {
        c[i++] = 0;
      }
    }
  } else {
    std::iota(img.begin(), img.end(), 0);
    do {
      if (should_eval() && eval() != 0) return lced_here();
    } while (std::next_permutation(img.begin(), img.end()));
  }

  return not_lced_verdict(CertificateKind::exhausted_search, count);
}

bool necessary_condition(const Matrix& g) {
  Field f = g.field();
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (!g.row_sum(i).is_zero()) return false;
  Matrix e = Matrix::ones(f, 1, g.cols());
  return gauss(g).rank == gauss(g.vstack(e)).rank;
}

namespace {

// Block probe shared by quick_sufficient and decide; reports which criterion
// fired so the certificate can name it.
std::optional<std::pair<Permutation, CertificateKind>> quick_check_impl(
    const Matrix& a) {
  const std::size_t k = a.rows(), m = a.cols();
  if (k == 0 || m == 0) return std::nullopt;
  Field f = a.field();
  const detail::FieldRep* rep = detail::rep_of(f);
  std::vector<std::uint64_t> ac(k * m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) ac[i * m + j] = a.at(i, j).index();

  detail::CharPolyEngine<detail::FieldCodeOps> eng(detail::FieldCodeOps{rep});
  std::vector<std::uint64_t> mm(k * k), cp(k + 1);
  std::vector<std::uint32_t> q(m);
  const std::uint64_t minus_one = rep->neg(1);

  auto probe = [&]() -> std::optional<CertificateKind> {
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m; ++j)
          acc = rep->add(acc, rep->mul(ac[x * m + q[j]], ac[y * m + j]));
        mm[x * k + y] = acc;
      }
    eng.run(mm.data(), k, cp.data());
    bool nil = true;
    for (std::size_t i = 0; i < k && nil; ++i) nil = cp[i] == 0;
    if (nil) return CertificateKind::quick_check_nilpotent;
    std::uint64_t lam = mm[0];
    bool scalar = lam != minus_one;
    for (std::size_t x = 0; x < k && scalar; ++x)
      for (std::size_t y = 0; y < k && scalar; ++y)
        scalar = mm[x * k + y] == (x == y ? lam : 0);
    if (scalar) return CertificateKind::quick_check_scalar;
    return std::nullopt;
  };
  auto witness = [&]() {
    std::vector<std::size_t> images(k + m);
    for (std::size_t i = 0; i < k; ++i) images[i] = i + 1;
    for (std::size_t j = 0; j < m; ++j) images[k + j] = k + q[j] + 1;
    return Permutation::from_images(images);
  };

  std::iota(q.begin(), q.end(), 0);
  if (auto kind = probe()) return std::make_pair(witness(), *kind);
  for (std::size_t x = 0; x + 1 < m; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      std::iota(q.begin(), q.end(), 0);
      std::swap(q[x], q[y]);
      if (auto kind = probe()) return std::make_pair(witness(), *kind);
    }
  return std::nullopt;
}

}  // namespace

std::optional<Permutation> quick_sufficient(const Matrix& a) {
  auto r = quick_check_impl(a);
  if (!r) return std::nullopt;
  return r->first;
}

CanonicalForm canonicalize(const Matrix& a, std::uint64_t orbit_bound) {
  const std::size_t k = a.rows(), m = a.cols();
  std::uint64_t pairs = 1;
  bool too_large = false;
  for (std::size_t i = 2; i <= k && !too_large; ++i) {
    if (pairs > orbit_bound / i) too_large = true;
    pairs *= i;
  }
  for (std::size_t i = 2; i <= m && !too_large; ++i) {
    if (pairs > orbit_bound / i) too_large = true;
    pairs *= i;
  }
  if (too_large || pairs > orbit_bound) return CanonicalForm{a, false};

  std::vector<std::size_t> cols(m);
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<std::vector<std::uint64_t>> rows(k, std::vector<std::uint64_t>(m));
  std::vector<std::uint64_t> best;
  std::vector<std::size_t> best_cols;
  std::vector<std::size_t> best_roworder;
  do {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) rows[i][j] = a.at(i, cols[j]).index();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return rows[x] < rows[y]; });
    std::vector<std::uint64_t> flat;
    flat.reserve(k * m);
    for (auto i : order)
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    if (best.empty() || flat < best) {
      best = std::move(flat);
      best_cols = cols;
      best_roworder = order;
    }
  } while (std::next_permutation(cols.begin(), cols.end()));

  Matrix out(a.field(), k, m);
  Field f = a.field();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.at(i, j) = f.from_index(best[i * m + j]);
  return CanonicalForm{std::move(out), true};
}

std::uint64_t orbit_size(const Matrix& a) {
  const std::size_t k = a.rows(), m = a.cols();
  std::uint64_t pairs = 1;
  for (std::size_t i = 2; i <= k; ++i) pairs *= i;
  for (std::size_t i = 2; i <= m; ++i) pairs *= i;
  if (pairs > 10'000'000) throw Error("orbit enumeration too large");

  std::vector<std::size_t> rp(k), cp(m);
  std::set<std::vector<std::uint64_t>> seen;
  std::iota(rp.begin(), rp.end(), 0);
  do {
    std::iota(cp.begin(), cp.end(), 0);
    do {
      std::vector<std::uint64_t> flat(k * m);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j)
          flat[i * m + j] = a.at(rp[i], cp[j]).index();
      seen.insert(std::move(flat));
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return seen.size();
}

namespace {

Matrix standard_matrix(Field f, const Matrix& tail) {
  return Matrix::identity(f, tail.rows()).hstack(tail);
}

Matrix column_matrix(const std::vector<FieldElement>& a) {
  if (a.empty()) throw ShapeMismatchError("tail must be nonempty");
  Field f = a[0].field();
  Matrix m(f, a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].field() != f) throw MixedFieldsError();
    m.at(i, 0) = a[i];
  }
  return m;
}

}  // namespace

Verdict closed_form_n_k1(const std::vector<FieldElement>& a,
                         const SearchStrategy& strat) {
  Matrix tail = column_matrix(a);
  const std::size_t k = a.size(), n = k + 1;
  Field f = tail.field();

  bool all_minus_one = true;
  const FieldElement minus_one = -f.one();
  for (const auto& ai : a)
    if (ai != minus_one) {
      all_minus_one = false;
      break;
    }
  if (n % f.characteristic() == 0 && all_minus_one)
    return not_lced_verdict(CertificateKind::closed_form_n_k1, 0);

  Matrix g = standard_matrix(f, tail);
  std::uint64_t count = 0;
  auto found = [&](const Permutation& w) {
    Verdict v;
    v.status = Status::lced;
    v.witness = w;
    v.certificate = CertificateKind::closed_form_n_k1;
    v.perms_examined = count;
    return v;
  };
  Permutation id(n);
  ++count;
  if (!det_gpgt(g, id).is_zero()) return found(id);
  for (std::size_t r = 1; r <= k; ++r) {
    Permutation t = Permutation::transposition(n, r, n);
    ++count;
    if (!det_gpgt(g, t).is_zero()) return found(t);
  }

  // Unreachable when the criterion above is sound; kept so the engine never
  // asserts emptiness it has not checked.
  Verdict v = witness_search(g, strat);
  v.perms_examined += count;
  v.certificate = v.status == Status::lced ? CertificateKind::closed_form_n_k1
                                           : CertificateKind::exhausted_search;
  v.note = "closed-form candidates exhausted; full search fallback";
  return v;
}

namespace {

// For shapes whose status is settled by a closed form, the search below only
// hunts a witness; hitting the evaluation limit must not retract the verdict.
Verdict settled_lced_search(const Matrix& g, const SearchStrategy& strat,
                            CertificateKind cert, const char* contradiction) {
  try {
    Verdict v = witness_search(g, strat);
    if (v.status != Status::lced) throw Error(contradiction);
    v.certificate = cert;
    return v;
  } catch (const LimitReachedError& e) {
    Verdict v;
    v.status = Status::lced;
    v.certificate = cert;
    v.perms_examined = e.examined;
    v.note = "witness search stopped at the evaluation limit";
    return v;
  }
}

}  // namespace

Verdict closed_form_k1(const std::vector<FieldElement>& a,
                       const SearchStrategy& strat) {
  Matrix tail(column_matrix(a).transpose());
  Field f = tail.field();
  const std::size_t n = tail.cols() + 1;

  bool all_one = true;
  for (std::size_t j = 0; j < tail.cols(); ++j)
    if (!tail.at(0, j).is_one()) {
      all_one = false;
      break;
    }
  if (n % f.characteristic() == 0 && all_one)
    return not_lced_verdict(CertificateKind::closed_form_k1, 0);

  return settled_lced_search(standard_matrix(f, tail), strat,
                             CertificateKind::closed_form_k1,
                             "single-row criterion contradicted by search");
}

Verdict closed_form_k2(const Matrix& a, const SearchStrategy& strat) {
  if (a.rows() != 2) throw ShapeMismatchError("tail must have two rows");
  Field f = a.field();
  const FieldElement minus_one = -f.one();
  const FieldElement one = f.one();

  bool condition = a.row_sum(0) == minus_one && a.row_sum(1) == minus_one;
  for (std::size_t j = 0; j < a.cols() && condition; ++j)
    condition = a.col_sum(j) == one;
  if (condition) return not_lced_verdict(CertificateKind::closed_form_k2, 0);

  return settled_lced_search(standard_matrix(f, a), strat,
                             CertificateKind::closed_form_k2,
                             "two-row criterion contradicted by search");
}

Verdict dual_transfer(const Verdict& v, const Matrix& a,
                      const SearchStrategy& strat) {
  Matrix dual_tail = -a.transpose();
  Verdict out;
  out.status = v.status;
  out.certificate = v.certificate;
  out.note = v.note.empty() ? "transferred to the dual standard form"
                            : v.note + "; transferred to the dual standard form";
  if (v.status == Status::lced) {
    Verdict ws = settled_lced_search(standard_matrix(a.field(), dual_tail),
                                     strat, out.certificate,
                                     "dual transfer contradicted by search");
    out.witness = ws.witness;
    out.perms_examined = ws.perms_examined;
    if (!ws.note.empty()) out.note += "; " + ws.note;
  }
  return out;
}

Verdict decide(const Matrix& g, const DecideOptions& opt) {
  const std::size_t k = g.rows(), n = g.cols();
  Field f = g.field();

  GaussResult gr = gauss(g);
  if (gr.rank < k)
    return not_lced_verdict(CertificateKind::rank_deficient, 0,
                            "rank " + std::to_string(gr.rank));

  auto verified_lced = [&](Verdict v) {
    if (det_gpgt(g, *v.witness).is_zero())
      throw Error("witness failed re-verification");
    return v;
  };

  if (k == 0) {
    Verdict v;
    v.status = Status::lced;
    v.witness = Permutation(n);
    v.certificate = CertificateKind::identity;
    v.perms_examined = 1;
    return verified_lced(std::move(v));
  }

  if (k == n) {
    Verdict v;
    v.status = Status::lced;
    v.witness = Permutation(n);
    v.certificate = CertificateKind::identity;
    v.perms_examined = 1;
    return verified_lced(std::move(v));
  }

  if (opt.use_necessary_condition && necessary_condition(g))
    return not_lced_verdict(CertificateKind::theorem_011, 0);

  StandardForm sf = standard_form(g);
  const Permutation sigma0_inv = sf.col_perm.inverse();
  auto map_back = [&](Verdict v) {
    if (!v.witness) return v;  // status settled, witness search was capped
    v.witness = sf.col_perm.compose(*v.witness).compose(sigma0_inv);
    return verified_lced(std::move(v));
  };

  bool dual_guarantees_lced = false;
  std::uint64_t dual_dets = 0;

  if (opt.use_closed_forms) {
    if (n == k + 1) {
      std::vector<FieldElement> a(k, f.zero());
      for (std::size_t i = 0; i < k; ++i) a[i] = sf.tail.at(i, 0);
      Verdict v = closed_form_n_k1(a, opt.strategy);
      return v.status == Status::lced ? map_back(std::move(v)) : v;
    }
    if (k == 1) {
      std::vector<FieldElement> a(n - 1, f.zero());
      for (std::size_t j = 0; j + 1 < n; ++j) a[j] = sf.tail.at(0, j);
      Verdict v = closed_form_k1(a, opt.strategy);
      return v.status == Status::lced ? map_back(std::move(v)) : v;
    }
    if (k == 2) {
      Verdict v = closed_form_k2(sf.tail, opt.strategy);
      return v.status == Status::lced ? map_back(std::move(v)) : v;
    }
    if (n - k == 2) {
      Verdict vd = closed_form_k2(-sf.tail.transpose(), opt.strategy);
      if (vd.status == Status::not_lced)
        return not_lced_verdict(CertificateKind::closed_form_k2,
                                vd.perms_examined,
                                "via the dual standard form");
      // The status is settled; fall through so the cheapest layer that can
      // produce a concrete witness names the certificate.
      dual_guarantees_lced = true;
      dual_dets = vd.perms_examined;
    }
  }

  if (opt.use_quick_sufficient) {
    if (auto qc = quick_check_impl(sf.tail)) {
      Verdict v;
      v.status = Status::lced;
      v.witness = qc->first;
      v.certificate = qc->second;
      v.perms_examined = dual_dets;
      return map_back(std::move(v));
    }
  }

  try {
    Verdict v = witness_search(g, opt.strategy);
    v.perms_examined += dual_dets;
    if (dual_guarantees_lced) {
      if (v.status != Status::lced)
        throw Error("dual transfer contradicted by search");
      v.note = "status settled by the dual two-row criterion";
    }
    return v;
  } catch (const LimitReachedError& e) {
    // A capped witness search cannot retract a status the dual criterion
    // already settled; only the witness stays unknown.
    if (!dual_guarantees_lced) throw;
    Verdict v;
    v.status = Status::lced;
    v.certificate = CertificateKind::closed_form_k2;
    v.perms_examined = e.examined + dual_dets;
    v.note = "status settled by the dual two-row criterion; "
             "witness search stopped at the evaluation limit";
    return v;
  }
}

bool constacyclic_sufficient(const CyclicSpec& spec) {
  Field f = spec.g.field();
  Polynomial target =
      Polynomial::monomial(f, spec.n) - Polynomial::from_elements(f, {spec.lambda});
  auto [quot, rem] = target.divmod(spec.g);
  if (!rem.is_zero())
    throw NotADivisorError("generator polynomial does not divide x^n - lambda");
  return poly_gcd(spec.g, quot).degree() == 0;
}

std::optional<Permutation> reciprocal_construction(const Polynomial& g,
                                                   std::size_t n) {
  Field f = g.field();
  if (f.characteristic() != 2)
    throw WrongCharacteristicError("construction requires characteristic 2");
  if (g.is_zero() || g.degree() == 0)
    throw BadShapeError("generator polynomial must have positive degree");
  const std::size_t r = static_cast<std::size_t>(g.degree());
  if (n != 3 * r) throw BadShapeError("length must be three times the degree");

  const FieldElement g0 = g.coeff(0);
  const FieldElement g1sq = g.eval(f.one()) * g.eval(f.one());
  Polynomial expected = Polynomial::monomial(f, 0, g0) +
                        Polynomial::monomial(f, r, g1sq) +
                        Polynomial::monomial(f, 2 * r, g0);
  if (g * g.reciprocal() != expected) return std::nullopt;
  if (g0.is_zero()) return std::nullopt;

  Permutation sigma(n);
  {
    std::vector<std::size_t> images(n);
    for (std::size_t j = 0; j < n; ++j) images[j] = j + 1;
    for (std::size_t i = 0; i < r; ++i) {
      images[i] = i + 2 * r + 1;
      images[i + 2 * r] = i + 1;
    }
    sigma = Permutation::from_images(images);
  }

  // The shift generator of the [3r, 2r] code; verify the block determinant.
  const std::size_t k = 2 * r;
  Matrix gen(f, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= r; ++j) gen.at(i, i + j) = g.coeff(j);
  FieldElement det = det_gpgt(gen, sigma);
  FieldElement expected_det = g0.pow(k) * g.leading().pow(k);
  if (det != expected_det || det.is_zero())
    throw Error("reciprocal witness verification failed");
  return sigma;
}

}  // namespace lced

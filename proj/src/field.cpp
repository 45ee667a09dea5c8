#include "lced/field.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <mutex>
#include <sstream>

#include "lced/detail/field_rep.hpp"

namespace lced {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t prime_inv(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on (a, p); a nonzero mod p.
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

// Dense F_p[x] vectors, low-to-high and trimmed, used at construction time only.
using PolyVec = std::vector<std::uint64_t>;

void trim(PolyVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

struct PolyDiv {
  PolyVec quot, rem;
};

PolyDiv poly_divmod(PolyVec a, const PolyVec& b, std::uint64_t p) {
  trim(a);
  PolyDiv out;
  if (a.size() < b.size()) {
    out.rem = std::move(a);
    return out;
  }
  out.quot.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t li = prime_inv(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t c = (a.back() * li) % p;
    std::size_t shift = a.size() - b.size();
    out.quot[shift] = c;
    std::uint64_t nc = p - c;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      a[shift + i] = (a[shift + i] + nc * b[i]) % p;
    a.pop_back();
    trim(a);
  }
  out.rem = std::move(a);
  return out;
}

PolyVec poly_rem(PolyVec a, const PolyVec& b, std::uint64_t p) {
  return poly_divmod(std::move(a), b, p).rem;
}

PolyVec poly_mulmod(const PolyVec& a, const PolyVec& b, const PolyVec& mod,
                    std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_rem(std::move(r), mod, p);
}

// Inverse of a modulo the monic irreducible mod, by extended Euclid in F_p[x].
PolyVec poly_invmod(PolyVec a, const PolyVec& mod, std::uint64_t p) {
  PolyVec r0 = mod, r1 = poly_rem(std::move(a), mod, p);
  PolyVec t0, t1 = {1};
  while (!r1.empty()) {
    PolyDiv d = poly_divmod(std::move(r0), r1, p);
    PolyVec qt;
    if (!d.quot.empty() && !t1.empty()) {
      qt.assign(d.quot.size() + t1.size() - 1, 0);
      for (std::size_t i = 0; i < d.quot.size(); ++i)
        for (std::size_t j = 0; j < t1.size(); ++j)
          qt[i + j] = (qt[i + j] + d.quot[i] * t1[j]) % p;
    }
    PolyVec t2(std::max(t0.size(), qt.size()), 0);
    for (std::size_t i = 0; i < t2.size(); ++i) {
      std::uint64_t x = i < t0.size() ? t0[i] : 0;
      std::uint64_t y = i < qt.size() ? qt[i] : 0;
      t2[i] = (x + p - y) % p;
    }
    trim(t2);
    r0 = std::move(r1);
    r1 = std::move(d.rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t s = prime_inv(r0[0], p);
  for (auto& c : t0) c = c * s % p;
  trim(t0);
  return t0;
}

// Trial division by every monic polynomial of degree up to half of m.
bool is_irreducible(const PolyVec& mod, std::uint64_t p, unsigned m) {
  for (unsigned d = 1; 2 * d <= m; ++d) {
    PolyVec cand(d + 1, 0);
    cand[d] = 1;
    while (true) {
      if (poly_rem(mod, cand, p).empty()) return false;
      unsigned i = 0;
      while (i < d && ++cand[i] == p) cand[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

struct RepKey {
  std::uint64_t p;
  unsigned m;
  std::vector<std::uint64_t> modulus;
  bool operator==(const RepKey&) const = default;
};

std::vector<std::pair<RepKey, std::unique_ptr<detail::FieldRep>>>& registry() {
  static auto* r =
      new std::vector<std::pair<RepKey, std::unique_ptr<detail::FieldRep>>>();
  return *r;
}

std::mutex& registry_mutex() {
  static auto* m = new std::mutex();
  return *m;
}

constexpr std::uint64_t kTableLimit = 1024;      // largest q with dense op tables
constexpr std::uint64_t kOrderLimit = 1u << 31;  // largest supported field order

const detail::FieldRep* intern(std::uint64_t p, unsigned m,
                               std::vector<std::uint64_t> modulus) {
  RepKey key{p, m, modulus};
  std::lock_guard<std::mutex> lock(registry_mutex());
  for (auto& [k, rep] : registry())
    if (k == key) return rep.get();

  auto rep = std::make_unique<detail::FieldRep>();
  rep->p = p;
  rep->m = m;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > kOrderLimit / p) throw Error("field order too large");
    q *= p;
  }
  rep->q = q;
  rep->modulus = std::move(modulus);

  if (m > 1 && q <= kTableLimit) {
    rep->tabled = true;
    rep->add_tab.resize(q * q);
    rep->mul_tab.resize(q * q);
    rep->neg_tab.resize(q);
    rep->inv_tab.assign(q, 0);
    for (std::uint64_t a = 0; a < q; ++a) {
      rep->neg_tab[a] = static_cast<std::uint32_t>(rep->neg_slow(a));
      for (std::uint64_t b = 0; b < q; ++b) {
        rep->add_tab[a * q + b] = static_cast<std::uint32_t>(rep->add_slow(a, b));
        rep->mul_tab[a * q + b] = static_cast<std::uint32_t>(rep->mul_slow(a, b));
      }
    }
    for (std::uint64_t a = 1; a < q; ++a)
      rep->inv_tab[a] = static_cast<std::uint32_t>(rep->inv_slow(a));
  }

  registry().emplace_back(std::move(key), std::move(rep));
  return registry().back().second.get();
}

}  // namespace

namespace detail {

const FieldRep* rep_of(Field f) { return f.rep_; }

void FieldRep::unpack(std::uint64_t code, std::uint64_t* digits) const {
  for (unsigned i = 0; i < m; ++i) {
    digits[i] = code % p;
    code /= p;
  }
}

std::uint64_t FieldRep::pack(const std::uint64_t* digits) const {
  std::uint64_t code = 0;
  for (unsigned i = m; i-- > 0;) code = code * p + digits[i];
  return code;
}

std::uint64_t FieldRep::add_slow(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t da[64], db[64];
  unpack(a, da);
  unpack(b, db);
  for (unsigned i = 0; i < m; ++i) {
    da[i] += db[i];
    if (da[i] >= p) da[i] -= p;
  }
  return pack(da);
}

std::uint64_t FieldRep::neg_slow(std::uint64_t a) const {
  std::uint64_t da[64];
  unpack(a, da);
  for (unsigned i = 0; i < m; ++i)
    if (da[i] != 0) da[i] = p - da[i];
  return pack(da);
}

std::uint64_t FieldRep::mul_slow(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t da[64], db[64];
  unpack(a, da);
  unpack(b, db);
  PolyVec pa(da, da + m), pb(db, db + m);
  trim(pa);
  trim(pb);
  PolyVec r = poly_mulmod(pa, pb, modulus, p);
  r.resize(m, 0);
  return pack(r.data());
}

std::uint64_t FieldRep::inv_slow(std::uint64_t a) const {
  std::uint64_t da[64];
  unpack(a, da);
  PolyVec pa(da, da + m);
  trim(pa);
  PolyVec r = poly_invmod(std::move(pa), modulus, p);
  r.resize(m, 0);
  return pack(r.data());
}

std::uint64_t FieldRep::inv_prime(std::uint64_t a) const { return prime_inv(a, p); }

}  // namespace detail

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw NonPrimeError(p);
  if (p > kOrderLimit) throw Error("field order too large");
  return Field(intern(p, 1, {}));
}

Field Field::extension(std::uint64_t p, unsigned m,
                       const std::vector<std::int64_t>& modulus) {
  if (!is_prime(p)) throw NonPrimeError(p);
  if (m == 0) throw Error("extension degree must be positive");
  if (m == 1) {
    if (!modulus.empty()) throw Error("prime field takes no modulus");
    return prime(p);
  }
  if (modulus.empty()) throw MissingModulusError();
  if (modulus.size() != m + 1)
    throw ReducibleModulusError("modulus must have degree " + std::to_string(m));
  PolyVec mod(m + 1);
  const auto sp = static_cast<std::int64_t>(p);
  for (unsigned i = 0; i <= m; ++i) {
    std::int64_t c = modulus[i] % sp;
    if (c < 0) c += sp;
    mod[i] = static_cast<std::uint64_t>(c);
  }
  if (mod[m] != 1) throw ReducibleModulusError("modulus must be monic");
  if (!is_irreducible(mod, p, m))
    throw ReducibleModulusError("modulus is reducible over F_" + std::to_string(p));
  return Field(intern(p, m, std::move(mod)));
}

Field Field::parse(std::string_view literal) {
  auto parse_u64 = [&](std::string_view s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error("bad field literal: " + std::string(literal));
    return v;
  };
  auto caret = literal.find('^');
  if (caret == std::string_view::npos) return prime(parse_u64(literal));
  auto colon = literal.find(':', caret);
  if (colon == std::string_view::npos) throw MissingModulusError();
  std::uint64_t p = parse_u64(literal.substr(0, caret));
  std::uint64_t m = parse_u64(literal.substr(caret + 1, colon - caret - 1));
  std::vector<std::int64_t> coeffs;
  std::string_view rest = literal.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error("bad field literal: " + std::string(literal));
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return extension(p, static_cast<unsigned>(m), coeffs);
}

std::uint64_t Field::characteristic() const { return rep_->p; }
unsigned Field::degree() const { return rep_->m; }
std::uint64_t Field::order() const { return rep_->q; }

FieldElement Field::zero() const { return FieldElement(rep_, 0); }

FieldElement Field::one() const { return FieldElement(rep_, 1); }

FieldElement Field::element(std::int64_t n) const {
  const auto sp = static_cast<std::int64_t>(rep_->p);
  std::int64_t c = n % sp;
  if (c < 0) c += sp;
  return FieldElement(rep_, static_cast<std::uint64_t>(c));
}

FieldElement Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > rep_->m)
    throw ShapeMismatchError("too many coordinates for this field");
  const auto sp = static_cast<std::int64_t>(rep_->p);
  std::uint64_t digits[64] = {0};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = coeffs[i] % sp;
    if (c < 0) c += sp;
    digits[i] = static_cast<std::uint64_t>(c);
  }
  return FieldElement(rep_, rep_->pack(digits));
}

FieldElement Field::from_index(std::uint64_t i) const {
  if (i >= rep_->q) throw Error("element index out of range");
  return FieldElement(rep_, i);
}

std::string Field::literal() const {
  std::ostringstream os;
  os << rep_->p;
  if (rep_->m > 1) {
    os << '^' << rep_->m << ':';
    for (unsigned i = 0; i <= rep_->m; ++i) {
      if (i) os << ',';
      os << rep_->modulus[i];
    }
  }
  return os.str();
}

Field FieldElement::field() const {
  if (!rep_) throw MixedFieldsError();
  return Field(rep_);
}

bool FieldElement::is_one() const { return rep_ && code_ == 1; }

std::vector<std::uint64_t> FieldElement::coeffs() const {
  if (!rep_) throw MixedFieldsError();
  std::uint64_t digits[64];
  rep_->unpack(code_, digits);
  return std::vector<std::uint64_t>(digits, digits + rep_->m);
}

const detail::FieldRep* FieldElement::check(const FieldElement& o) const {
  if (!rep_ || rep_ != o.rep_) throw MixedFieldsError();
  return rep_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  auto* r = check(o);
  return FieldElement(r, r->add(code_, o.code_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  auto* r = check(o);
  return FieldElement(r, r->sub(code_, o.code_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  auto* r = check(o);
  return FieldElement(r, r->mul(code_, o.code_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  auto* r = check(o);
  return FieldElement(r, r->mul(code_, r->inv(o.code_)));
}

FieldElement FieldElement::operator-() const {
  if (!rep_) throw MixedFieldsError();
  return FieldElement(rep_, rep_->neg(code_));
}

FieldElement FieldElement::inv() const {
  if (!rep_) throw MixedFieldsError();
  return FieldElement(rep_, rep_->inv(code_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (!rep_) throw MixedFieldsError();
  return FieldElement(rep_, rep_->pow(code_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return code_ == o.code_;
}

std::string FieldElement::str() const {
  if (!rep_) throw MixedFieldsError();
  std::uint64_t digits[64];
  rep_->unpack(code_, digits);
  std::ostringstream os;
  for (unsigned i = 0; i < rep_->m; ++i) {
    if (i) os << ':';
    os << digits[i];
  }
  return os.str();
}

QuadraticCharacter quadratic_character(const FieldElement& a) {
  if (a.is_zero()) return QuadraticCharacter::zero;
  Field f = a.field();
  if (f.characteristic() == 2) return QuadraticCharacter::square;
  FieldElement e = a.pow((f.order() - 1) / 2);
  return e.is_one() ? QuadraticCharacter::square : QuadraticCharacter::nonsquare;
}

}  // namespace lced

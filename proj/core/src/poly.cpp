#include "mtdual/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mtdual/error.hpp"

namespace mtdual {

namespace {

void require_field(const FieldPtr& field) {
  if (!field) throw PreconditionError("polynomial requires a field");
}

std::string term_string(const GaloisField& f, std::uint32_t code, int exponent) {
  if (exponent == 0) return f.format(code);
  std::string mono = exponent == 1 ? "x" : "x^" + std::to_string(exponent);
  if (code == 1) return mono;
  return f.format(code) + "*" + mono;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses one product of factors: field elements, "x" and "x^k".
Poly parse_term(const FieldPtr& field, std::string_view term) {
  term = strip(term);
  if (term.empty()) throw ParseError("empty polynomial term");
  FieldElement coeff = field->one();
  int exponent = 0;
  while (!term.empty()) {
    const auto star = term.find('*');
    const std::string_view factor = strip(term.substr(0, star));
    if (factor.empty()) throw ParseError("empty factor in polynomial term");
    if (factor.front() == 'x') {
      if (factor.size() == 1) {
        exponent += 1;
      } else {
        if (factor[1] != '^') throw ParseError("invalid monomial '" + std::string(factor) + "'");
        const std::string_view digits = strip(factor.substr(2));
        int k = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || k < 0)
          throw ParseError("invalid exponent in '" + std::string(factor) + "'");
        exponent += k;
      }
    } else {
      coeff = coeff * field->parse(factor);
    }
    if (star == std::string_view::npos) break;
    term.remove_prefix(star + 1);
  }
  return Poly::monomial(field, coeff, exponent);
}

}  // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(FieldPtr field) : field_(std::move(field)) { require_field(field_); }

Poly::Poly(FieldPtr field, std::vector<std::uint32_t> codes) : field_(std::move(field)), c_(std::move(codes)) {
  require_field(field_);
  for (auto c : c_)
    if (c >= field_->order()) throw PreconditionError("polynomial coefficient code out of range");
  trim();
}

Poly::Poly(FieldPtr field, const std::vector<FieldElement>& coeffs) : field_(std::move(field)) {
  require_field(field_);
  c_.reserve(coeffs.size());
  for (const auto& a : coeffs) {
    if (!a.field().same_as(*field_)) throw PreconditionError("coefficient from a different field");
    c_.push_back(a.code());
  }
  trim();
}

Poly Poly::constant(FieldPtr field, const FieldElement& c) { return monomial(std::move(field), c, 0); }

Poly Poly::monomial(FieldPtr field, const FieldElement& c, int k) {
  if (k < 0) throw PreconditionError("negative exponent in polynomial");
  Poly f(std::move(field));
  if (!c.field().same_as(*f.field_)) throw PreconditionError("coefficient from a different field");
  if (c.is_zero()) return f;
  f.c_.assign(static_cast<std::size_t>(k) + 1, 0);
  f.c_[k] = c.code();
  return f;
}

Poly Poly::binomial(FieldPtr field, int m, const FieldElement& c) {
  if (m < 1) throw PreconditionError("binomial degree must be positive");
  Poly xm = monomial(field, field->one(), m);
  return xm - constant(field, c);
}

Poly Poly::parse(FieldPtr field, std::string_view text) {
  require_field(field);
  Poly result(field);
  std::string_view s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  // Split into signed terms at top-level '+' and '-'. A '-' directly after
  // '^' belongs to an exponent, and brackets enclose coefficient lists.
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  bool saw_term = false;
  auto flush = [&](std::size_t end) {
    const std::string_view term = strip(s.substr(start, end - start));
    if (term.empty()) {
      if (saw_term || negative) throw ParseError("dangling sign in polynomial '" + std::string(s) + "'");
      return;
    }
    Poly t = parse_term(field, term);
    result = negative ? result - t : result + t;
    saw_term = true;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in polynomial");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      std::size_t j = i;
      while (j > 0 && std::isspace(static_cast<unsigned char>(s[j - 1]))) --j;
      if (ch == '-' && j > 0 && s[j - 1] == '^') continue;
      const std::string_view before = strip(s.substr(start, i - start));
      if (before.empty() && !saw_term && i == 0) {
        negative = (ch == '-');
        start = i + 1;
        continue;
      }
      flush(i);
      negative = (ch == '-');
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in polynomial");
  const std::string_view tail = strip(s.substr(start));
  if (tail.empty()) throw ParseError("dangling sign in polynomial '" + std::string(s) + "'");
  flush(s.size());
  return result;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw PreconditionError("polynomials over different fields");
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return field_->element(c_[i]);
}

FieldElement Poly::leading() const { return c_.empty() ? field_->zero() : field_->element(c_.back()); }

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(leading().inverse());
}

Poly Poly::scaled(const FieldElement& c) const {
  if (!c.field().same_as(*field_)) throw PreconditionError("scalar from a different field");
  Poly r(field_);
  if (c.is_zero()) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], c.code());
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw PreconditionError("negative shift of a polynomial");
  if (c_.empty()) return *this;
  Poly r(field_);
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::frobenius(long long mu) const {
  Poly r = *this;
  for (auto& c : r.c_) c = field_->frobenius(c, mu);
  return r;
}

Poly Poly::trace(int upsilon) const {
  Poly r = *this;
  for (auto& c : r.c_) c = field_->trace(c, upsilon);
  r.trim();
  return r;
}

bool Poly::is_over_subfield(int upsilon) const {
  return std::all_of(c_.begin(), c_.end(), [&](std::uint32_t c) { return field_->in_subfield(c, upsilon); });
}

Poly Poly::operator+(const Poly& rhs) const {
  check_same_field(rhs);
  Poly r(field_);
  r.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    const std::uint32_t a = i < c_.size() ? c_[i] : 0;
    const std::uint32_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    r.c_[i] = field_->add(a, b);
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  check_same_field(rhs);
  Poly r(field_);
  if (c_.empty() || rhs.c_.empty()) return r;
  r.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      r.c_[i + j] = field_->add(r.c_[i + j], field_->mul(c_[i], rhs.c_[j]));
  }
  r.trim();
  return r;
}

bool Poly::operator==(const Poly& rhs) const { return c_ == rhs.c_ && field_->same_as(*rhs.field_); }

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += term_string(*field_, c_[i], static_cast<int>(i));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (!f.field().same_as(g.field())) throw PreconditionError("polynomials over different fields");
  const GaloisField& F = f.field();
  std::vector<std::uint32_t> rem = f.codes();
  const auto& gc = g.codes();
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly(f.field_ptr()), f};
  std::vector<std::uint32_t> quo(rem.size() - gc.size() + 1, 0);
  const std::uint32_t lead_inv = F.inv(gc.back());
  for (int k = static_cast<int>(rem.size()) - 1; k >= dg; --k) {
    const std::uint32_t c = rem[k];
    if (c == 0) continue;
    const std::uint32_t t = F.mul(c, lead_inv);
    quo[k - dg] = t;
    for (int i = 0; i <= dg; ++i) rem[k - dg + i] = F.sub(rem[k - dg + i], F.mul(t, gc[i]));
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {Poly(f.field_ptr(), std::move(quo)), Poly(f.field_ptr(), std::move(rem))};
}

bool divides(const Poly& g, const Poly& f) {
  if (g.is_zero()) return false;
  return divmod(f, g).remainder.is_zero();
}

Poly gcd(const Poly& f, const Poly& g) {
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& f, const Poly& g) {
  const FieldPtr& F = f.field_ptr();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(F, F->one()), s1(F);
  Poly t0(F), t1 = Poly::constant(F, F->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(FieldPtr field) : field_(std::move(field)) { require_field(field_); }

LaurentPoly::LaurentPoly(FieldPtr field, int low, std::vector<std::uint32_t> codes)
    : field_(std::move(field)), low_(low), c_(std::move(codes)) {
  require_field(field_);
  normalize();
}

LaurentPoly::LaurentPoly(const Poly& f) : field_(f.field_ptr()), low_(0), c_(f.codes()) { normalize(); }

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

FieldElement LaurentPoly::coeff(int exponent) const {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return field_->element(c_[i]);
}

Poly LaurentPoly::to_poly() const {
  if (c_.empty()) return Poly(field_);
  if (low_ < 0) throw PreconditionError("Laurent polynomial has negative exponents");
  std::vector<std::uint32_t> codes(static_cast<std::size_t>(low_), 0);
  codes.insert(codes.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(codes));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw PreconditionError("Laurent polynomials over different fields");
  if (c_.empty()) return rhs;
  if (rhs.c_.empty()) return *this;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high(), rhs.high());
  std::vector<std::uint32_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out[low_ - lo + i] = c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i)
    out[rhs.low_ - lo + i] = field_->add(out[rhs.low_ - lo + i], rhs.c_[i]);
  return LaurentPoly(field_, lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  std::vector<std::uint32_t> neg = rhs.c_;
  for (auto& c : neg) c = field_->neg(c);
  return *this + LaurentPoly(rhs.field_, rhs.low_, std::move(neg));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw PreconditionError("Laurent polynomials over different fields");
  if (c_.empty() || rhs.c_.empty()) return LaurentPoly(field_);
  std::vector<std::uint32_t> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(c_[i], rhs.c_[j]));
  return LaurentPoly(field_, low_ + rhs.low_, std::move(out));
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  return low_ == rhs.low_ && c_ == rhs.c_ && field_->same_as(*rhs.field_);
}

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += term_string(*field_, c_[i], low_ + static_cast<int>(i));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

LaurentPoly subst_inverse(const Poly& f) { return subst_inverse(LaurentPoly(f)); }

LaurentPoly subst_inverse(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  std::vector<std::uint32_t> rev(f.codes().rbegin(), f.codes().rend());
  return LaurentPoly(f.field_ptr(), -f.high(), std::move(rev));
}

LaurentPoly laurent_shift_mul(const LaurentPoly& f, int k) {
  if (f.is_zero()) return f;
  return LaurentPoly(f.field_ptr(), f.low() + k, f.codes());
}

Poly reduce_mod_binomial(const LaurentPoly& f, int m, const FieldElement& c) {
  if (m < 1) throw PreconditionError("quotient degree m must be positive");
  if (c.is_zero()) throw PreconditionError("binomial constant must be nonzero");
  const GaloisField& F = *f.field_ptr();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < f.codes().size(); ++i) {
    const std::uint32_t a = f.codes()[i];
    if (a == 0) continue;
    const long long t = static_cast<long long>(f.low()) + static_cast<long long>(i);
    // floor division: t = wraps*m + r with 0 <= r < m
    long long wraps = t / m;
    long long r = t % m;
    if (r < 0) {
      r += m;
      --wraps;
    }
    out[static_cast<std::size_t>(r)] = F.add(out[static_cast<std::size_t>(r)], F.mul(a, F.pow(c.code(), wraps)));
  }
  return Poly(f.field_ptr(), std::move(out));
}

Poly reduce_mod_binomial(const Poly& f, int m, const FieldElement& c) {
  return reduce_mod_binomial(LaurentPoly(f), m, c);
}

Poly reduce_in_quotient(const LaurentPoly& f, int m, const FieldElement& lambda) {
  if (lambda.is_zero()) throw PreconditionError("shift constant lambda must be nonzero");
  return reduce_mod_binomial(f, m, lambda.inverse());
}

}  // namespace mtdual

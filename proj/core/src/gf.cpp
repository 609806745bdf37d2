#include "mtdual/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "mtdual/error.hpp"

namespace mtdual {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Remainder of f modulo the monic g over F_p; both ascending.
std::vector<std::uint32_t> fp_rem(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                                  std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (f.size() > dg) {
    const std::uint32_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  return f;
}

bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const int e = static_cast<int>(modulus.size()) - 1;
  for (int d = 1; d <= e / 2; ++d) {
    // Enumerate every monic polynomial of degree d.
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (fp_rem(modulus, g, p).empty()) return false;
      int i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_integer(std::string_view s, std::string_view context) {
  s = trim(s);
  long long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw ParseError("invalid integer '" + std::string(s) + "' in " + std::string(context));
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const GaloisField* field, std::uint32_t code) : field_(field), code_(code) {}

const GaloisField& FieldElement::field() const {
  if (field_ == nullptr) throw PreconditionError("field element has no field");
  return *field_;
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return field().digits(code_); }

const GaloisField* FieldElement::checked_peer(const FieldElement& rhs) const {
  const GaloisField& f = field();
  if (!f.same_as(rhs.field())) throw PreconditionError("field elements belong to different fields");
  return &f;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  const auto* f = checked_peer(rhs);
  return {f, f->add(code_, rhs.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  const auto* f = checked_peer(rhs);
  return {f, f->sub(code_, rhs.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const auto* f = checked_peer(rhs);
  return {f, f->mul(code_, rhs.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  const auto* f = checked_peer(rhs);
  return {f, f->div(code_, rhs.code_)};
}

FieldElement FieldElement::operator-() const { return {&field(), field().neg(code_)}; }

FieldElement FieldElement::inverse() const { return {&field(), field().inv(code_)}; }

FieldElement FieldElement::pow(long long n) const { return {&field(), field().pow(code_, n)}; }

FieldElement FieldElement::frobenius(long long mu) const { return {&field(), field().frobenius(code_, mu)}; }

bool FieldElement::in_subfield(int upsilon) const { return field().in_subfield(code_, upsilon); }

FieldElement FieldElement::trace(int upsilon) const { return {&field(), field().trace(code_, upsilon)}; }

bool FieldElement::operator==(const FieldElement& rhs) const {
  if (field_ == nullptr || rhs.field_ == nullptr) return field_ == rhs.field_ && code_ == rhs.code_;
  return code_ == rhs.code_ && field_->same_as(*rhs.field_);
}

std::string FieldElement::to_string() const { return field().format(code_); }

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// GaloisField

FieldPtr GaloisField::create(std::uint32_t p, std::vector<std::uint32_t> modulus,
                             std::optional<std::vector<std::uint32_t>> generator) {
  return FieldPtr(new GaloisField(p, std::move(modulus), std::move(generator)));
}

FieldPtr GaloisField::prime(std::uint32_t p) { return create(p, {0, 1}); }

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus,
                         std::optional<std::vector<std::uint32_t>> generator)
    : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw PreconditionError("characteristic " + std::to_string(p_) + " is not prime");
  if (modulus_.size() < 2) throw PreconditionError("modulus must have degree at least 1");
  for (auto c : modulus_)
    if (c >= p_) throw PreconditionError("modulus coefficient out of range [0, p)");
  if (modulus_.back() != 1) throw PreconditionError("modulus must be monic");
  e_ = static_cast<int>(modulus_.size()) - 1;

  std::uint64_t q = 1;
  pow_p_.clear();
  for (int i = 0; i < e_; ++i) {
    pow_p_.push_back(static_cast<std::uint32_t>(q));
    q *= p_;
    if (q > kMaxOrder) throw PreconditionError("field order exceeds the supported desk-scale bound");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (!is_irreducible(modulus_, p_)) throw PreconditionError("modulus is reducible over F_p");

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    neg_[a] = encode(d);
  }
  if (q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      auto da = digits(a);
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto db = digits(b);
        for (int i = 0; i < e_; ++i) db[i] = (da[i] + db[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(encode(db));
      }
    }
  }

  auto order_of = [&](std::uint32_t g) {
    std::uint32_t x = g;
    std::uint32_t k = 1;
    while (x != 1) {
      x = slow_mul(x, g);
      ++k;
      if (k > q_) return 0u;
    }
    return k;
  };

  std::uint32_t g = 0;
  if (generator) {
    if (generator->size() > static_cast<std::size_t>(e_))
      throw PreconditionError("generator has more than e coefficients");
    for (auto c : *generator)
      if (c >= p_) throw PreconditionError("generator coefficient out of range [0, p)");
    g = encode(*generator);
    if (g == 0 || order_of(g) != q_ - 1)
      throw PreconditionError("designated generator is not primitive");
    designated_ = true;
  } else {
    for (std::uint32_t c = 1; c < q_; ++c) {
      if (order_of(c) == q_ - 1) {
        g = c;
        break;
      }
    }
  }

  exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = x;
    exp_[i + q_ - 1] = x;
    log_[x] = i;
    x = slow_mul(x, g);
  }

  frob_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
}

std::uint32_t GaloisField::encode(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i];
  return code;
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t code) const {
  std::vector<std::uint32_t> d(e_, 0);
  for (int i = 0; i < e_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint32_t GaloisField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint32_t> prod(2 * e_, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  auto r = fp_rem(std::move(prod), modulus_, p_);
  r.resize(e_, 0);
  return encode(r);
}

FieldElement GaloisField::element(std::uint32_t code) const {
  if (code >= q_) throw PreconditionError("element code out of range");
  return {this, code};
}

FieldElement GaloisField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(e_)) throw PreconditionError("too many coefficients for GF(p^e)");
  for (auto c : coeffs)
    if (c >= p_) throw PreconditionError("coefficient out of range [0, p)");
  return {this, encode(coeffs)};
}

FieldElement GaloisField::from_int(long long k) const {
  const long long r = ((k % static_cast<long long>(p_)) + p_) % p_;
  return {this, static_cast<std::uint32_t>(r)};
}

FieldElement GaloisField::power_of_generator(long long k) const {
  const long long n = q_ - 1;
  return {this, exp_[static_cast<std::size_t>(((k % n) + n) % n)]};
}

std::uint32_t GaloisField::log(std::uint32_t code) const {
  if (code == 0) throw PreconditionError("logarithm of zero");
  return log_[code];
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  std::uint32_t r = 0;
  for (int i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("division by zero in GF(" + std::to_string(q_) + ")");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, long long n) const {
  if (a == 0) {
    if (n < 0) throw PreconditionError("division by zero in GF(" + std::to_string(q_) + ")");
    return n == 0 ? 1 : 0;
  }
  const long long m = q_ - 1;
  const long long k = ((static_cast<long long>(log_[a]) * (((n % m) + m) % m)) % m);
  return exp_[static_cast<std::size_t>(k)];
}

std::uint32_t GaloisField::frobenius(std::uint32_t a, long long mu) const {
  const long long steps = ((mu % e_) + e_) % e_;
  for (long long i = 0; i < steps; ++i) a = frob_[a];
  return a;
}

void GaloisField::require_divisor(int upsilon) const {
  if (upsilon <= 0 || e_ % upsilon != 0)
    throw PreconditionError("upsilon=" + std::to_string(upsilon) + " does not divide e=" + std::to_string(e_));
}

bool GaloisField::in_subfield(std::uint32_t a, int upsilon) const {
  require_divisor(upsilon);
  return frobenius(a, upsilon) == a;
}

std::uint32_t GaloisField::trace(std::uint32_t a, int upsilon) const {
  require_divisor(upsilon);
  std::uint32_t sum = 0;
  std::uint32_t term = a;
  for (int i = 0; i < e_ / upsilon; ++i) {
    sum = add(sum, term);
    term = frobenius(term, upsilon);
  }
  return sum;
}

FieldElement GaloisField::parse(std::string_view text) const {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty field element");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated coefficient list '" + std::string(s) + "'");
    std::vector<std::uint32_t> coeffs;
    std::string_view body = s.substr(1, s.size() - 2);
    if (trim(body).empty()) throw ParseError("empty coefficient list");
    while (true) {
      const auto comma = body.find(',');
      const long long c = parse_integer(body.substr(0, comma), "coefficient list");
      if (c < 0 || c >= static_cast<long long>(p_))
        throw ParseError("coefficient " + std::to_string(c) + " out of range [0, p)");
      coeffs.push_back(static_cast<std::uint32_t>(c));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    if (coeffs.size() > static_cast<std::size_t>(e_))
      throw ParseError("coefficient list longer than e in '" + std::string(s) + "'");
    return {this, encode(coeffs)};
  }
  if (s.front() == 'g') {
    if (s.size() == 1) return power_of_generator(1);
    if (s[1] != '^') throw ParseError("invalid power notation '" + std::string(s) + "'");
    return power_of_generator(parse_integer(s.substr(2), "power notation"));
  }
  const long long k = parse_integer(s, "field element");
  if (k < 0 || k >= static_cast<long long>(p_))
    throw ParseError("integer element " + std::to_string(k) + " out of range [0, p)");
  return {this, static_cast<std::uint32_t>(k)};
}

std::string GaloisField::format(std::uint32_t code) const {
  if (code < p_) return std::to_string(code);
  if (designated_) return log_[code] == 1 ? std::string("g") : "g^" + std::to_string(log_[code]);
  std::ostringstream os;
  os << '[';
  const auto d = digits(code);
  for (int i = 0; i < e_; ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << '^' << e_ << ") modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  os << ']';
  if (designated_) {
    os << " generator [";
    const auto d = digits(exp_[1 % exp_.size()]);
    for (int i = 0; i < e_; ++i) os << (i ? "," : "") << d[i];
    os << ']';
  }
  return os.str();
}

}  // namespace mtdual

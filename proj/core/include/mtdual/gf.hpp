#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtdual {

class GaloisField;

/// Fields are immutable once built and are shared by every polynomial and
/// matrix defined over them.
using FieldPtr = std::shared_ptr<const GaloisField>;

/// An element of GF(p^e) in polynomial basis.
///
/// The element is stored as the integer code sum(a_i * p^i) of its coefficient
/// vector (a_0, ..., a_{e-1}) together with a non-owning pointer to its field.
/// The field must outlive the element; in practice elements are produced by a
/// field held through a FieldPtr.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const GaloisField* field, std::uint32_t code);

  const GaloisField& field() const;
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  /// Coefficients over F_p in ascending order, always of length e.
  std::vector<std::uint32_t> coeffs() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inverse() const;
  FieldElement pow(long long n) const;
  /// a^(p^mu).
  FieldElement frobenius(long long mu) const;
  bool in_subfield(int upsilon) const;
  FieldElement trace(int upsilon) const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  const GaloisField* checked_peer(const FieldElement& rhs) const;

  const GaloisField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// GF(p^e) = F_p[t] / (modulus).
///
/// Construction validates that p is prime and that the modulus is monic,
/// of degree e and irreducible (by trial division with every monic
/// polynomial of degree <= e/2). Multiplication goes through log/antilog
/// tables built from a primitive element: the designated generator when one
/// is given, otherwise the primitive element with the smallest code.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// `modulus` is ascending and includes the leading 1.
  static FieldPtr create(std::uint32_t p, std::vector<std::uint32_t> modulus,
                         std::optional<std::vector<std::uint32_t>> generator = std::nullopt);
  /// F_p with modulus t.
  static FieldPtr prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool has_designated_generator() const { return designated_; }
  /// The designated generator, or the smallest primitive element.
  FieldElement generator() const { return element(exp_[1 % exp_.size()]); }

  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The image of the integer k in the prime subfield.
  FieldElement from_int(long long k) const;
  /// generator()^k, k may be negative.
  FieldElement power_of_generator(long long k) const;
  /// Discrete log base generator(); requires a nonzero code.
  std::uint32_t log(std::uint32_t code) const;

  // Raw arithmetic on codes. No field checks.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, long long n) const;
  std::uint32_t frobenius(std::uint32_t a, long long mu) const;
  bool in_subfield(std::uint32_t a, int upsilon) const;
  std::uint32_t trace(std::uint32_t a, int upsilon) const;

  /// Structural equality: same p and modulus, so codes are interchangeable.
  bool same_as(const GaloisField& other) const {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

  /// Accepts "0", a bare integer below p, "[a0,...,a_{e-1}]", "g" and "g^k".
  FieldElement parse(std::string_view text) const;
  std::string format(std::uint32_t code) const;
  std::vector<std::uint32_t> digits(std::uint32_t code) const;
  std::string describe() const;

 private:
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus,
              std::optional<std::vector<std::uint32_t>> generator);

  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  void require_divisor(int upsilon) const;

  std::uint32_t p_;
  int e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool designated_ = false;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[i] = g^i
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> frob_;
  std::vector<std::uint32_t> pow_p_;  // pow_p_[i] = p^i
  std::vector<std::uint16_t> add_table_;  // only for small q
};

}  // namespace mtdual

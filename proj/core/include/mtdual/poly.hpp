#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtdual/gf.hpp"

namespace mtdual {

/// Dense univariate polynomial over GF(p^e), coefficients ascending.
///
/// Canonical form has no trailing zero coefficients; the zero polynomial has
/// no coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<std::uint32_t> codes);
  Poly(FieldPtr field, const std::vector<FieldElement>& coeffs);

  static Poly constant(FieldPtr field, const FieldElement& c);
  static Poly monomial(FieldPtr field, const FieldElement& c, int k);
  static Poly x(FieldPtr field) { return monomial(field, field->one(), 1); }
  /// x^m - c
  static Poly binomial(FieldPtr field, int m, const FieldElement& c);
  /// Parses "c0 + c1*x + c2*x^2" with terms in any order.
  static Poly parse(FieldPtr field, std::string_view text);

  const FieldPtr& field_ptr() const { return field_; }
  const GaloisField& field() const { return *field_; }

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  const std::vector<std::uint32_t>& codes() const { return c_; }

  Poly monic() const;
  Poly scaled(const FieldElement& c) const;
  /// Multiplication by x^k, k >= 0.
  Poly shifted(int k) const;
  /// Coefficientwise a -> a^(p^mu).
  Poly frobenius(long long mu) const;
  /// Coefficientwise trace to F_{p^upsilon}.
  Poly trace(int upsilon) const;
  bool is_over_subfield(int upsilon) const;

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
  Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  void trim();
  void check_same_field(const Poly& rhs) const;

  FieldPtr field_;
  std::vector<std::uint32_t> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// f = q*g + r with deg r < deg g. Throws PreconditionError when g = 0.
DivMod divmod(const Poly& f, const Poly& g);
/// True when g != 0 divides f.
bool divides(const Poly& g, const Poly& f);

/// Monic generator of (f, g); gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g);

struct ExtendedGcd {
  Poly gcd;  // monic
  Poly s;
  Poly t;  // s*f + t*g = gcd
};
ExtendedGcd extended_gcd(const Poly& f, const Poly& g);

/// Polynomial in x and 1/x: sum_{i} c_i x^{low + i}.
/// Canonical form has nonzero first and last coefficients; zero has none.
class LaurentPoly {
 public:
  explicit LaurentPoly(FieldPtr field);
  LaurentPoly(FieldPtr field, int low, std::vector<std::uint32_t> codes);
  explicit LaurentPoly(const Poly& f);

  const FieldPtr& field_ptr() const { return field_; }
  int low() const { return low_; }
  /// Exponent of the last coefficient; undefined for zero.
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint32_t>& codes() const { return c_; }
  FieldElement coeff(int exponent) const;

  bool is_polynomial() const { return c_.empty() || low_ >= 0; }
  /// Throws PreconditionError when a negative exponent is present.
  Poly to_poly() const;

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly& rhs) const;
  bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

  /// Ascending text form, e.g. "2*x^-25 + 2*x^-24 + 1".
  std::string to_string() const;

 private:
  void normalize();

  FieldPtr field_;
  int low_ = 0;
  std::vector<std::uint32_t> c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// f(1/x).
LaurentPoly subst_inverse(const Poly& f);
LaurentPoly subst_inverse(const LaurentPoly& f);
/// f * x^k.
LaurentPoly laurent_shift_mul(const LaurentPoly& f, int k);

/// Canonical representative of f in F_q[x]/(x^m - c): every exponent is
/// brought into [0, m) using x^m = c (and x^{-1} = c^{-1} x^{m-1}).
/// Requires m >= 1 and c != 0.
Poly reduce_mod_binomial(const LaurentPoly& f, int m, const FieldElement& c);
Poly reduce_mod_binomial(const Poly& f, int m, const FieldElement& c);

/// Reduction used for the dual parity matrix: representative of f modulo
/// x^m - 1/lambda, so each wrap of a negative exponent x^{-mu} becomes
/// lambda * x^{m-mu}. Requires lambda != 0.
Poly reduce_in_quotient(const LaurentPoly& f, int m, const FieldElement& lambda);

}  // namespace mtdual

#include "mtdual/duals.hpp"

#include <numeric>

#include "mtdual/error.hpp"

namespace mtdual {

namespace {

void check_kappa(const MTCode& c, int kappa) {
  if (kappa < 0 || kappa >= c.field().degree())
    throw PreconditionError("kappa=" + std::to_string(kappa) + " outside [0, e) with e=" +
                            std::to_string(c.field().degree()));
}

MTCode with_companion(const MTCode& like, const std::vector<FieldElement>& shifts, const PolyMatrix& gpm) {
  auto comp = try_solve_left_factor(gpm, twist_matrix(like.field_ptr(), shifts, like.block_lengths()));
  if (!comp) throw InvariantError("constructed GPM does not contain diag(x^m_j - lambda_j)");
  return MTCode::from_parts(like.field_ptr(), shifts, like.block_lengths(), gpm, *comp);
}

IntersectionResult intersect_impl(const MTCode& c, int kappa, int tau, bool two_sided) {
  check_kappa(c, kappa);
  if (tau < 1) throw PreconditionError("tau must be positive");
  const int e = c.field().degree();
  const long long four = 4LL * kappa * tau;
  if (four % e != 0) throw PreconditionError(two_sided ? "e does not divide 4κ" : "e does not divide 4κτ");
  const int upsilon = std::gcd(e, static_cast<int>((2LL * kappa * tau) % e));
  for (const auto& lambda : c.shifts())
    if (!lambda.in_subfield(upsilon)) throw PreconditionError("shift constants not in F_{p^υ}");

  const MTCode dual = euclidean_dual(c);
  const MTCode right = frobenius_code(dual, e - kappa);
  const MTCode image = frobenius_code(right, 2LL * kappa * tau);
  if (right.shifts() != image.shifts()) throw InvariantError("intersected codes have different shift constants");

  // Rows of [[G1, G1], [G2, 0]] with a zero left half are exactly (0, u), u in both modules.
  const std::size_t ell = c.index();
  const FieldPtr& F = c.field_ptr();
  PolyMatrix stack(F, 2 * ell, 2 * ell);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t j = 0; j < ell; ++j) {
      stack.at(i, j) = right.gpm().at(i, j);
      stack.at(i, ell + j) = right.gpm().at(i, j);
      stack.at(ell + i, j) = image.gpm().at(i, j);
    }
  const PolyMatrix p = hermite_normal_form(stack).hnf.block(ell, ell, ell, ell);

  const PolyMatrix& h_image = right.gpm();
  const PolyMatrix& b_image = right.companion();
  auto y = try_solve_left_factor(h_image, p);
  if (!y) throw InvariantError("intersection is not a subcode of the right dual");
  auto x = try_solve_left_factor(*y, b_image);
  if (!x) throw InvariantError("X Y = sigma(B) has no polynomial solution");

  MTCode code = MTCode::from_parts(F, right.shifts(), c.block_lengths(), p, *x);
  DualCertificate cert{*x, *y, *y * h_image, upsilon, kappa, tau};
  if (!certificate_holds(cert, h_image, b_image)) throw InvariantError("two-sided certificate invariants fail");
  return {std::move(code), std::move(cert), h_image, b_image};
}

}  // namespace

std::vector<FieldElement> inverse_shifts(const std::vector<FieldElement>& shifts) {
  std::vector<FieldElement> out;
  for (const auto& s : shifts) out.push_back(s.inverse());
  return out;
}

EuclideanDualSteps euclidean_dual_steps(const MTCode& c) {
  const std::size_t ell = c.index();
  const FieldPtr& F = c.field_ptr();
  const auto& m = c.block_lengths();
  const PolyMatrix& a = c.companion();

  EuclideanDualSteps s{a, {ell, ell, {}}, {ell, ell, {}}, PolyMatrix(F, ell, ell), PolyMatrix(F, ell, ell),
                       PolyMatrix(F, ell, ell)};
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t j = 0; j < ell; ++j) {
      const int d_j = c.gpm().at(j, j).degree();
      LaurentPoly inv = subst_inverse(a.at(i, j));
      LaurentPoly star = laurent_shift_mul(inv, m[i] - d_j);
      s.a_double_star.at(i, j) = i < j ? reduce_in_quotient(star, m[i], c.shifts()[i]) : star.to_poly();
      s.a_inverse.entries.push_back(std::move(inv));
      s.a_star.entries.push_back(std::move(star));
    }
  s.h = s.a_double_star.transpose();
  s.h_reduced = hermite_normal_form(s.h).hnf;
  return s;
}

MTCode euclidean_dual(const MTCode& c) {
  const EuclideanDualSteps s = euclidean_dual_steps(c);
  MTCode dual = with_companion(c, inverse_shifts(c.shifts()), s.h_reduced);
  if (dual.dimension() + c.dimension() != c.length()) throw InvariantError("dim C + dim C^perp != n");
  return dual;
}

PolyMatrix qc_qt_gqc_dual_gpm(const MTCode& c) {
  if (!is_quasi_cyclic(c) && !is_quasi_twisted(c) && !is_generalized_quasi_cyclic(c))
    throw PreconditionError("code is not quasi-cyclic, quasi-twisted or generalized quasi-cyclic");
  const std::size_t ell = c.index();
  const auto& m = c.block_lengths();
  PolyMatrix h(c.field_ptr(), ell, ell);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t j = 0; j < ell; ++j) {
      const int d_i = c.gpm().at(i, i).degree();
      const LaurentPoly entry = laurent_shift_mul(subst_inverse(c.companion().at(j, i)), m[j] - d_i);
      h.at(i, j) = reduce_in_quotient(entry, m[j], c.shifts()[j]);
    }
  return h;
}

MTCode frobenius_code(const MTCode& c, long long mu) {
  std::vector<FieldElement> shifts;
  for (const auto& s : c.shifts()) shifts.push_back(s.frobenius(mu));
  return MTCode::from_parts(c.field_ptr(), std::move(shifts), c.block_lengths(), frobenius_matrix(c.gpm(), mu),
                            frobenius_matrix(c.companion(), mu));
}

MTCode right_galois_dual(const MTCode& c, int kappa) {
  check_kappa(c, kappa);
  return frobenius_code(euclidean_dual(c), c.field().degree() - kappa);
}

MTCode left_galois_dual(const MTCode& c, int kappa) {
  check_kappa(c, kappa);
  return frobenius_code(euclidean_dual(c), kappa);
}

std::vector<IdentityCheck> galois_identities_check(const MTCode& c, int kappa) {
  check_kappa(c, kappa);
  const int e = c.field().degree();
  const MTCode perp = euclidean_dual(c);
  const MTCode right = right_galois_dual(c, kappa);
  const MTCode left = left_galois_dual(c, kappa);
  std::vector<IdentityCheck> out;
  out.push_back({"left dual of right dual is C", same_subspace(left_galois_dual(right, kappa), c)});
  out.push_back({"right dual of sigma^k C is C^perp and equals sigma^k of right dual",
                 same_subspace(right_galois_dual(frobenius_code(c, kappa), kappa), perp) &&
                     same_subspace(frobenius_code(right, kappa), perp)});
  out.push_back({"left dual of sigma^(e-k) C is C^perp and equals sigma^(e-k) of left dual",
                 same_subspace(left_galois_dual(frobenius_code(c, e - kappa), kappa), perp) &&
                     same_subspace(frobenius_code(left, e - kappa), perp)});
  out.push_back({"right dual equals left dual of sigma^2(e-k) C and sigma^2(e-k) of left dual",
                 same_subspace(right, left_galois_dual(frobenius_code(c, 2LL * (e - kappa)), kappa)) &&
                     same_subspace(right, frobenius_code(left, 2LL * (e - kappa)))});
  out.push_back({"left dual equals right dual of sigma^2k C and sigma^2k of right dual",
                 same_subspace(left, right_galois_dual(frobenius_code(c, 2LL * kappa), kappa)) &&
                     same_subspace(left, frobenius_code(right, 2LL * kappa))});
  const bool duals_equal = same_subspace(right, left);
  const bool fixed = same_subspace(frobenius_code(c, 2LL * kappa), c);
  out.push_back({"right dual equals left dual iff sigma^2k C = C", duals_equal == fixed});
  return out;
}

IntersectionResult sigma_intersection(const MTCode& c, int kappa, int tau) {
  return intersect_impl(c, kappa, tau, false);
}

IntersectionResult two_sided_galois_dual(const MTCode& c, int kappa) { return intersect_impl(c, kappa, 1, true); }

bool certificate_holds(const DualCertificate& cert, const PolyMatrix& h_image, const PolyMatrix& b_image) {
  const auto& x = cert.x_matrix;
  const auto& y = cert.y_matrix;
  if (!x.is_square() || !y.is_square() || !x.is_upper_triangular() || !y.is_upper_triangular()) return false;
  if (!x.is_over_subfield(cert.upsilon)) return false;
  if (x * y != b_image) return false;
  if (y * h_image != cert.gpm_product) return false;
  return cert.gpm_product.is_over_subfield(cert.upsilon);
}

bool trace_auxiliary_check(const DualCertificate& cert, const PolyMatrix& b_image) {
  return cert.x_matrix * trace_matrix(cert.y_matrix, cert.upsilon) == trace_matrix(b_image, cert.upsilon);
}

bool direct_sum_check(const MTCode& c, int kappa) {
  const int n = c.length();
  const int k = c.dimension();
  if (2 * k != n)
    throw PreconditionError("direct sum test needs dim C = n/2 (dim " + std::to_string(k) + ", n " +
                            std::to_string(n) + ")");
  return two_sided_galois_dual(c, kappa).code.dimension() == 0;
}

}  // namespace mtdual

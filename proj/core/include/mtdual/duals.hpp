#pragma once

#include <string>
#include <vector>

#include "mtdual/mtcode.hpp"

namespace mtdual {

/// Intermediate matrices of the Euclidean dual construction.
struct EuclideanDualSteps {
  PolyMatrix a;                // companion matrix of the input code
  LaurentMatrix a_inverse;     // A(1/x)
  LaurentMatrix a_star;        // (i,j) entry times x^{m_i - d_j}
  PolyMatrix a_double_star;    // strictly upper entries reduced mod x^{m_i} - 1/lambda_i
  PolyMatrix h;                // transpose of a_double_star
  PolyMatrix h_reduced;        // Hermite normal form of h
};

std::vector<FieldElement> inverse_shifts(const std::vector<FieldElement>& shifts);

EuclideanDualSteps euclidean_dual_steps(const MTCode& c);
/// Delta-MT code with Delta = (1/lambda_1, ..., 1/lambda_l).
MTCode euclidean_dual(const MTCode& c);

/// Parity matrix from the closed formula for QC, QT and GQC codes: every
/// entry of A* (diagonal included) is reduced, then transposed. It generates
/// the dual only together with diag(x^{m_j} - 1/lambda_j).
/// PreconditionError when the code is none of the three kinds.
PolyMatrix qc_qt_gqc_dual_gpm(const MTCode& c);

/// sigma^mu applied to every codeword.
MTCode frobenius_code(const MTCode& c, long long mu);

/// {a : <c, a>_kappa = 0 for all c in C}, 0 <= kappa < e.
MTCode right_galois_dual(const MTCode& c, int kappa);
/// {a : <a, c>_kappa = 0 for all c in C}, 0 <= kappa < e.
MTCode left_galois_dual(const MTCode& c, int kappa);

struct IdentityCheck {
  std::string name;
  bool holds = false;
};

/// The six identities relating right duals, left duals and Frobenius images,
/// each evaluated as code equality.
std::vector<IdentityCheck> galois_identities_check(const MTCode& c, int kappa);

struct DualCertificate {
  PolyMatrix x_matrix;     // over F_{p^upsilon}[x]
  PolyMatrix y_matrix;     // over F_q[x]
  PolyMatrix gpm_product;  // y_matrix * sigma^{e-kappa}(H)
  int upsilon = 0;
  int kappa = 0;
  int tau = 0;
};

struct IntersectionResult {
  MTCode code;
  DualCertificate certificate;
  PolyMatrix h_image;  // sigma^{e-kappa}(H)
  PolyMatrix b_image;  // sigma^{e-kappa}(B)
};

/// Right kappa-Galois dual intersected with its sigma^{2 kappa tau} image.
/// Requires e | 4 kappa tau and every lambda_j in F_{p^upsilon},
/// upsilon = gcd(e, 2 kappa tau).
IntersectionResult sigma_intersection(const MTCode& c, int kappa, int tau);
/// Intersection of the right and left kappa-Galois duals (tau = 1).
IntersectionResult two_sided_galois_dual(const MTCode& c, int kappa);

/// Upper triangular shape, X over the subfield, X Y = sigma^{e-kappa}(B),
/// Y sigma^{e-kappa}(H) over the subfield and equal to gpm_product.
bool certificate_holds(const DualCertificate& cert, const PolyMatrix& h_image, const PolyMatrix& b_image);

/// X Tr(Y) = Tr(b_image) with the trace to F_{p^upsilon}.
bool trace_auxiliary_check(const DualCertificate& cert, const PolyMatrix& b_image);

/// True when F_q^n is the direct sum of the right and left kappa-Galois
/// duals. Requires dim C = n/2.
bool direct_sum_check(const MTCode& c, int kappa);

}  // namespace mtdual

#pragma once

#include <optional>
#include <vector>

#include "mtdual/polymat.hpp"

namespace mtdual {

/// A vector of F_q^n, blocked as (a_{0,1}..a_{m_1-1,1}, ..., a_{0,l}..a_{m_l-1,l}).
using Codeword = std::vector<FieldElement>;
using PolyVector = std::vector<Poly>;

/// diag(x^{m_1} - lambda_1, ..., x^{m_l} - lambda_l)
PolyMatrix twist_matrix(const FieldPtr& field, const std::vector<FieldElement>& shifts,
                        const std::vector<int>& block_lengths);

/// A Lambda-multi-twisted code, held as its reduced GPM G together with the
/// companion matrix A of the identical equation A G = D.
class MTCode {
 public:
  /// Smallest Lambda-MT code containing the given rows. Each row has l
  /// entries; they are reduced mod x^{m_j} - lambda_j, stacked above D and
  /// brought to Hermite normal form.
  static MTCode from_generator_rows(FieldPtr field, const std::vector<PolyVector>& rows,
                                    std::vector<FieldElement> shifts, std::vector<int> block_lengths);
  static MTCode from_generator_matrix(FieldPtr field, const PolyMatrix& rows, std::vector<FieldElement> shifts,
                                      std::vector<int> block_lengths);

  /// Accepts a matrix that must already be the reduced GPM of a Lambda-MT
  /// code. Throws PreconditionError otherwise.
  static MTCode from_reduced_gpm(FieldPtr field, PolyMatrix gpm, std::vector<FieldElement> shifts,
                                 std::vector<int> block_lengths);

  /// Assembles a code from a reduced GPM and its companion. Both are checked
  /// (shape and A G = D); a failure raises InvariantError since callers
  /// derive the parts from other codes.
  static MTCode from_parts(FieldPtr field, std::vector<FieldElement> shifts, std::vector<int> block_lengths,
                           PolyMatrix gpm, PolyMatrix companion);

  const FieldPtr& field_ptr() const { return field_; }
  const GaloisField& field() const { return *field_; }
  std::size_t index() const { return block_lengths_.size(); }
  const std::vector<int>& block_lengths() const { return block_lengths_; }
  int length() const;
  const std::vector<FieldElement>& shifts() const { return shifts_; }
  const PolyMatrix& gpm() const { return gpm_; }
  const PolyMatrix& companion() const { return companion_; }
  PolyMatrix twist() const { return twist_matrix(field_, shifts_, block_lengths_); }

  /// sum(m_j - deg g_jj); InvariantError if it differs from deg det A.
  int dimension() const;

  /// F_q-basis: x^t * row_i(G) for 0 <= t < m_i - deg g_ii, reduced blockwise.
  std::vector<Codeword> basis() const;

  bool contains(const Codeword& v) const;
  /// Same block lengths, shifts and reduced GPM.
  bool operator==(const MTCode& rhs) const;
  bool operator!=(const MTCode& rhs) const { return !(*this == rhs); }

 private:
  MTCode(FieldPtr field, std::vector<FieldElement> shifts, std::vector<int> block_lengths, PolyMatrix gpm,
         PolyMatrix companion);

  FieldPtr field_;
  std::vector<FieldElement> shifts_;
  std::vector<int> block_lengths_;
  PolyMatrix gpm_;
  PolyMatrix companion_;
};

PolyVector phi_decode(const FieldPtr& field, const Codeword& v, const std::vector<int>& block_lengths);
/// Component j must have degree < m_j.
Codeword phi_encode(const FieldPtr& field, const PolyVector& pv, const std::vector<int>& block_lengths);
/// Blockwise twisted rotation T_Lambda.
Codeword shift_T(const Codeword& v, const std::vector<FieldElement>& shifts, const std::vector<int>& block_lengths);

/// Y with G1 = Y G2 when c1 is a subcode of c2.
std::optional<PolyMatrix> subcode_of(const MTCode& c1, const MTCode& c2);

/// Equality as subsets of F_q^n. Codes with different shift constants can
/// still coincide (the zero code, the whole space).
bool same_subspace(const MTCode& c1, const MTCode& c2);

bool is_quasi_cyclic(const MTCode& c);
bool is_quasi_twisted(const MTCode& c);
bool is_generalized_quasi_cyclic(const MTCode& c);

}  // namespace mtdual

#pragma once

#include <cstdint>
#include <vector>

#include "mtdual/mtcode.hpp"

namespace mtdual::oracle {

/// A linear code of F_q^n held by the reduced row echelon form of a
/// generator matrix. Entries are raw element codes of `field`.
struct ExpandedCode {
  FieldPtr field;
  int n = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  int k() const { return static_cast<int>(rows.size()); }
  std::vector<Codeword> generator_rows() const;
  bool operator==(const ExpandedCode& rhs) const;
};

/// Incremental row echelon basis; insert() reports whether the vector was
/// independent of everything inserted before.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, int n);
  bool insert(std::vector<std::uint32_t> v);
  bool in_span(std::vector<std::uint32_t> v) const;
  ExpandedCode rref() const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<std::uint32_t>& v) const;

  FieldPtr field_;
  int n_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<int> pivots_;
};

std::vector<std::uint32_t> to_codes(const Codeword& v);
Codeword from_codes(const FieldPtr& field, const std::vector<std::uint32_t>& v);

ExpandedCode span(const FieldPtr& field, int n, const std::vector<Codeword>& vectors);

/// F_q-span of every T_Lambda orbit of the rows of the GPM.
ExpandedCode expand(const MTCode& c);

enum class DualSide { euclidean, right, left };

/// Dual by solving the linear system of the kappa-Galois form directly.
ExpandedCode nullspace_dual(const ExpandedCode& c, int kappa, DualSide side);

ExpandedCode frobenius_image(const ExpandedCode& c, long long mu);
ExpandedCode intersect(const ExpandedCode& a, const ExpandedCode& b);
bool equal(const ExpandedCode& a, const ExpandedCode& b);
/// a + b = F_q^n and a, b meet in zero.
bool direct_sum(const ExpandedCode& a, const ExpandedCode& b);

/// sum a_i sigma^kappa(b_i)
FieldElement galois_inner_product(const Codeword& a, const Codeword& b, int kappa);

inline constexpr std::uint64_t kDefaultDistanceCap = std::uint64_t{1} << 24;

/// Minimum nonzero weight by enumerating all q^k codewords.
/// PreconditionError for the zero code or when q^k exceeds `cap`.
int min_distance(const ExpandedCode& c, std::uint64_t cap = kDefaultDistanceCap);

}  // namespace mtdual::oracle

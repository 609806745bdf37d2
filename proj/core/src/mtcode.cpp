#include "mtdual/mtcode.hpp"

#include <algorithm>
#include <numeric>

#include "mtdual/error.hpp"

namespace mtdual {

namespace {

void check_parameters(const FieldPtr& field, const std::vector<FieldElement>& shifts,
                      const std::vector<int>& block_lengths) {
  if (!field) throw PreconditionError("code requires a field");
  if (block_lengths.empty()) throw PreconditionError("code index must be at least 1");
  if (shifts.size() != block_lengths.size())
    throw PreconditionError("expected " + std::to_string(block_lengths.size()) + " shift constants, got " +
                            std::to_string(shifts.size()));
  for (int m : block_lengths)
    if (m < 1) throw PreconditionError("block lengths must be positive");
  for (const auto& lambda : shifts) {
    if (!lambda.field().same_as(*field)) throw PreconditionError("shift constant from a different field");
    if (lambda.is_zero()) throw PreconditionError("shift constants must be nonzero");
  }
}

// Upper triangular, monic nonzero diagonal, entries above the diagonal of
// lower degree than the diagonal entry of their column.
bool has_reduced_shape(const PolyMatrix& g) {
  if (!g.is_square() || !g.is_upper_triangular()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!g.at(i, i).is_monic()) return false;
    for (std::size_t h = 0; h < i; ++h)
      if (!g.at(h, i).is_zero() && g.at(h, i).degree() >= g.at(i, i).degree()) return false;
  }
  return true;
}

}  // namespace

PolyMatrix twist_matrix(const FieldPtr& field, const std::vector<FieldElement>& shifts,
                        const std::vector<int>& block_lengths) {
  check_parameters(field, shifts, block_lengths);
  std::vector<Poly> diag;
  for (std::size_t j = 0; j < shifts.size(); ++j) diag.push_back(Poly::binomial(field, block_lengths[j], shifts[j]));
  return PolyMatrix::diagonal(field, diag);
}

MTCode::MTCode(FieldPtr field, std::vector<FieldElement> shifts, std::vector<int> block_lengths, PolyMatrix gpm,
               PolyMatrix companion)
    : field_(std::move(field)),
      shifts_(std::move(shifts)),
      block_lengths_(std::move(block_lengths)),
      gpm_(std::move(gpm)),
      companion_(std::move(companion)) {}

MTCode MTCode::from_generator_rows(FieldPtr field, const std::vector<PolyVector>& rows,
                                   std::vector<FieldElement> shifts, std::vector<int> block_lengths) {
  check_parameters(field, shifts, block_lengths);
  const std::size_t ell = block_lengths.size();
  PolyMatrix stack(field, rows.size(), ell);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ell)
      throw PreconditionError("generator row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(ell));
    for (std::size_t j = 0; j < ell; ++j) {
      if (!rows[i][j].field().same_as(*field)) throw PreconditionError("generator entry from a different field");
      stack.at(i, j) = reduce_mod_binomial(rows[i][j], block_lengths[j], shifts[j]);
    }
  }
  const PolyMatrix d = twist_matrix(field, shifts, block_lengths);
  PolyMatrix g = reduced_basis(stack.stacked(d));
  PolyMatrix a = solve_left_factor(g, d);
  return from_parts(std::move(field), std::move(shifts), std::move(block_lengths), std::move(g), std::move(a));
}

MTCode MTCode::from_generator_matrix(FieldPtr field, const PolyMatrix& rows, std::vector<FieldElement> shifts,
                                     std::vector<int> block_lengths) {
  std::vector<PolyVector> r;
  for (std::size_t i = 0; i < rows.rows(); ++i) r.push_back(rows.row(i));
  if (rows.rows() == 0 && rows.cols() != block_lengths.size())
    throw PreconditionError("generator matrix has the wrong number of columns");
  return from_generator_rows(std::move(field), r, std::move(shifts), std::move(block_lengths));
}

MTCode MTCode::from_reduced_gpm(FieldPtr field, PolyMatrix gpm, std::vector<FieldElement> shifts,
                                std::vector<int> block_lengths) {
  check_parameters(field, shifts, block_lengths);
  if (gpm.rows() != block_lengths.size() || gpm.cols() != block_lengths.size())
    throw PreconditionError("GPM must be l x l");
  if (!has_reduced_shape(gpm)) throw PreconditionError("matrix is not in Hermite normal form");
  auto a = try_solve_left_factor(gpm, twist_matrix(field, shifts, block_lengths));
  if (!a) throw PreconditionError("rows do not generate a module containing diag(x^m_j - lambda_j)");
  return from_parts(std::move(field), std::move(shifts), std::move(block_lengths), std::move(gpm), *std::move(a));
}

MTCode MTCode::from_parts(FieldPtr field, std::vector<FieldElement> shifts, std::vector<int> block_lengths,
                          PolyMatrix gpm, PolyMatrix companion) {
  check_parameters(field, shifts, block_lengths);
  const std::size_t ell = block_lengths.size();
  if (gpm.rows() != ell || gpm.cols() != ell || companion.rows() != ell || companion.cols() != ell)
    throw InvariantError("GPM and companion must be l x l");
  if (!has_reduced_shape(gpm)) throw InvariantError("GPM is not reduced");
  if (companion * gpm != twist_matrix(field, shifts, block_lengths))
    throw InvariantError("identical equation A G = D fails");
  return MTCode(std::move(field), std::move(shifts), std::move(block_lengths), std::move(gpm),
                std::move(companion));
}

int MTCode::length() const { return std::accumulate(block_lengths_.begin(), block_lengths_.end(), 0); }

int MTCode::dimension() const {
  int k = 0;
  for (std::size_t j = 0; j < index(); ++j) k += block_lengths_[j] - gpm_.at(j, j).degree();
  const int via_det = determinant(companion_).degree();
  if (via_det != k)
    throw InvariantError("dimension mismatch: sum formula " + std::to_string(k) + ", deg det A " +
                         std::to_string(via_det));
  return k;
}

std::vector<Codeword> MTCode::basis() const {
  std::vector<Codeword> out;
  const std::size_t ell = index();
  for (std::size_t i = 0; i < ell; ++i) {
    const int count = block_lengths_[i] - gpm_.at(i, i).degree();
    for (int t = 0; t < count; ++t) {
      PolyVector pv;
      for (std::size_t j = 0; j < ell; ++j)
        pv.push_back(reduce_mod_binomial(gpm_.at(i, j).shifted(t), block_lengths_[j], shifts_[j]));
      out.push_back(phi_encode(field_, pv, block_lengths_));
    }
  }
  return out;
}

bool MTCode::contains(const Codeword& v) const {
  PolyVector r = phi_decode(field_, v, block_lengths_);
  for (std::size_t j = 0; j < index(); ++j) {
    if (r[j].is_zero()) continue;
    auto [q, rem] = divmod(r[j], gpm_.at(j, j));
    if (!rem.is_zero()) return false;
    for (std::size_t h = j; h < index(); ++h) r[h] -= q * gpm_.at(j, h);
  }
  return true;
}

bool MTCode::operator==(const MTCode& rhs) const {
  return field_->same_as(*rhs.field_) && block_lengths_ == rhs.block_lengths_ && shifts_ == rhs.shifts_ &&
         gpm_ == rhs.gpm_;
}

PolyVector phi_decode(const FieldPtr& field, const Codeword& v, const std::vector<int>& block_lengths) {
  const int n = std::accumulate(block_lengths.begin(), block_lengths.end(), 0);
  if (static_cast<int>(v.size()) != n)
    throw PreconditionError("vector length " + std::to_string(v.size()) + " does not match n=" + std::to_string(n));
  PolyVector out;
  std::size_t pos = 0;
  for (int m : block_lengths) {
    std::vector<std::uint32_t> codes;
    for (int i = 0; i < m; ++i) codes.push_back(v[pos + i].code());
    pos += m;
    out.emplace_back(field, std::move(codes));
  }
  return out;
}

Codeword phi_encode(const FieldPtr& field, const PolyVector& pv, const std::vector<int>& block_lengths) {
  if (pv.size() != block_lengths.size()) throw PreconditionError("polynomial vector has the wrong length");
  Codeword out;
  for (std::size_t j = 0; j < pv.size(); ++j) {
    if (pv[j].degree() >= block_lengths[j])
      throw PreconditionError("component " + std::to_string(j) + " has degree >= m_j; reduce it first");
    for (int i = 0; i < block_lengths[j]; ++i) out.push_back(i <= pv[j].degree() ? pv[j].coeff(i) : field->zero());
  }
  return out;
}

Codeword shift_T(const Codeword& v, const std::vector<FieldElement>& shifts, const std::vector<int>& block_lengths) {
  if (shifts.size() != block_lengths.size()) throw PreconditionError("shift/block count mismatch");
  const int n = std::accumulate(block_lengths.begin(), block_lengths.end(), 0);
  if (static_cast<int>(v.size()) != n) throw PreconditionError("vector length does not match n");
  Codeword out(v.size());
  std::size_t pos = 0;
  for (std::size_t j = 0; j < block_lengths.size(); ++j) {
    const std::size_t m = block_lengths[j];
    out[pos] = shifts[j] * v[pos + m - 1];
    for (std::size_t i = 1; i < m; ++i) out[pos + i] = v[pos + i - 1];
    pos += m;
  }
  return out;
}

std::optional<PolyMatrix> subcode_of(const MTCode& c1, const MTCode& c2) {
  if (c1.block_lengths() != c2.block_lengths() || c1.shifts() != c2.shifts())
    throw PreconditionError("subcode test needs equal shifts and block lengths");
  return try_solve_left_factor(c2.gpm(), c1.gpm());
}

bool same_subspace(const MTCode& c1, const MTCode& c2) {
  if (c1.block_lengths() != c2.block_lengths()) return false;
  if (c1.shifts() == c2.shifts()) return c1.gpm() == c2.gpm();
  if (c1.dimension() != c2.dimension()) return false;
  for (const auto& v : c1.basis())
    if (!c2.contains(v)) return false;
  return true;
}

namespace {

bool equal_lengths(const MTCode& c) {
  const auto& m = c.block_lengths();
  return std::all_of(m.begin(), m.end(), [&](int x) { return x == m.front(); });
}

bool all_shifts_one(const MTCode& c) {
  return std::all_of(c.shifts().begin(), c.shifts().end(), [](const FieldElement& a) { return a.is_one(); });
}

}  // namespace

bool is_quasi_cyclic(const MTCode& c) { return equal_lengths(c) && all_shifts_one(c); }

bool is_quasi_twisted(const MTCode& c) {
  const auto& s = c.shifts();
  return equal_lengths(c) && std::all_of(s.begin(), s.end(), [&](const FieldElement& a) { return a == s.front(); });
}

bool is_generalized_quasi_cyclic(const MTCode& c) { return all_shifts_one(c); }

}  // namespace mtdual

#include "mtdual/oracle.hpp"

#include <algorithm>

#include "mtdual/error.hpp"

namespace mtdual::oracle {

std::vector<Codeword> ExpandedCode::generator_rows() const {
  std::vector<Codeword> out;
  for (const auto& r : rows) out.push_back(from_codes(field, r));
  return out;
}

bool ExpandedCode::operator==(const ExpandedCode& rhs) const {
  return n == rhs.n && field->same_as(*rhs.field) && rows == rhs.rows;
}

EchelonBasis::EchelonBasis(FieldPtr field, int n) : field_(std::move(field)), n_(n) {}

void EchelonBasis::reduce(std::vector<std::uint32_t>& v) const {
  const GaloisField& F = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    const std::uint32_t c = v[p];
    if (c == 0) continue;
    const auto& row = rows_[r];
    for (int j = p; j < n_; ++j)
      if (row[j] != 0) v[j] = F.sub(v[j], F.mul(c, row[j]));
  }
}

bool EchelonBasis::insert(std::vector<std::uint32_t> v) {
  if (static_cast<int>(v.size()) != n_) throw PreconditionError("vector length mismatch in echelon basis");
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t a) { return a != 0; });
  if (it == v.end()) return false;
  const int p = static_cast<int>(it - v.begin());
  const GaloisField& F = *field_;
  const std::uint32_t inv = F.inv(v[p]);
  for (int j = p; j < n_; ++j) v[j] = F.mul(v[j], inv);
  // keep every stored row reduced at the new pivot
  for (auto& row : rows_) {
    const std::uint32_t c = row[p];
    if (c == 0) continue;
    for (int j = p; j < n_; ++j)
      if (v[j] != 0) row[j] = F.sub(row[j], F.mul(c, v[j]));
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::in_span(std::vector<std::uint32_t> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t a) { return a == 0; });
}

ExpandedCode EchelonBasis::rref() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  ExpandedCode out{field_, n_, {}};
  for (auto i : order) out.rows.push_back(rows_[i]);
  return out;
}

std::vector<std::uint32_t> to_codes(const Codeword& v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const auto& a : v) out.push_back(a.code());
  return out;
}

Codeword from_codes(const FieldPtr& field, const std::vector<std::uint32_t>& v) {
  Codeword out;
  out.reserve(v.size());
  for (auto c : v) out.push_back(field->element(c));
  return out;
}

ExpandedCode span(const FieldPtr& field, int n, const std::vector<Codeword>& vectors) {
  EchelonBasis basis(field, n);
  for (const auto& v : vectors) basis.insert(to_codes(v));
  return basis.rref();
}

ExpandedCode expand(const MTCode& c) {
  const FieldPtr& F = c.field_ptr();
  const auto& m = c.block_lengths();
  EchelonBasis basis(F, c.length());
  for (std::size_t i = 0; i < c.index(); ++i) {
    PolyVector pv;
    for (std::size_t j = 0; j < c.index(); ++j) pv.push_back(reduce_mod_binomial(c.gpm().at(i, j), m[j], c.shifts()[j]));
    Codeword v = phi_encode(F, pv, m);
    // The span so far is shift invariant, so the orbit can stop at the first dependent shift.
    while (basis.insert(to_codes(v))) v = shift_T(v, c.shifts(), m);
  }
  return basis.rref();
}

namespace {

// Basis of {b : M b = 0} for M in reduced row echelon form.
std::vector<std::vector<std::uint32_t>> kernel(const ExpandedCode& m) {
  const GaloisField& F = *m.field;
  std::vector<int> pivot_of_col(m.n, -1);
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const auto& row = m.rows[r];
    const int p = static_cast<int>(std::find_if(row.begin(), row.end(), [](std::uint32_t a) { return a != 0; }) -
                                   row.begin());
    pivot_of_col[p] = static_cast<int>(r);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (int f = 0; f < m.n; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<std::uint32_t> b(m.n, 0);
    b[f] = 1;
    for (int col = 0; col < m.n; ++col) {
      const int r = pivot_of_col[col];
      if (r >= 0) b[col] = F.neg(m.rows[r][f]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

ExpandedCode from_rows(const FieldPtr& field, int n, const std::vector<std::vector<std::uint32_t>>& rows) {
  EchelonBasis basis(field, n);
  for (const auto& r : rows) basis.insert(r);
  return basis.rref();
}

}  // namespace

ExpandedCode frobenius_image(const ExpandedCode& c, long long mu) {
  std::vector<std::vector<std::uint32_t>> rows = c.rows;
  for (auto& r : rows)
    for (auto& a : r) a = c.field->frobenius(a, mu);
  return from_rows(c.field, c.n, rows);
}

ExpandedCode nullspace_dual(const ExpandedCode& c, int kappa, DualSide side) {
  const int e = c.field->degree();
  if (kappa < 0 || kappa >= e) throw PreconditionError("kappa outside [0, e)");
  switch (side) {
    case DualSide::euclidean:
      return from_rows(c.field, c.n, kernel(c));
    case DualSide::right:
      // sum c_i sigma^k(a_i) = 0  <=>  sigma^k(a) in ker(G)
      return frobenius_image(from_rows(c.field, c.n, kernel(c)), e - kappa);
    case DualSide::left:
      return from_rows(c.field, c.n, kernel(frobenius_image(c, kappa)));
  }
  throw PreconditionError("unknown dual side");
}

ExpandedCode intersect(const ExpandedCode& a, const ExpandedCode& b) {
  if (a.n != b.n) throw PreconditionError("length mismatch in intersection");
  EchelonBasis both(a.field, a.n);
  for (const auto& r : kernel(a)) both.insert(r);
  for (const auto& r : kernel(b)) both.insert(r);
  return from_rows(a.field, a.n, kernel(both.rref()));
}

bool equal(const ExpandedCode& a, const ExpandedCode& b) {
  if (a.n != b.n) throw PreconditionError("length mismatch in comparison");
  return a == b;
}

bool direct_sum(const ExpandedCode& a, const ExpandedCode& b) {
  if (a.n != b.n) throw PreconditionError("length mismatch in direct sum test");
  return a.k() + b.k() == a.n && intersect(a, b).k() == 0;
}

FieldElement galois_inner_product(const Codeword& a, const Codeword& b, int kappa) {
  if (a.size() != b.size() || a.empty()) throw PreconditionError("inner product of vectors of different lengths");
  FieldElement s = a[0].field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i].frobenius(kappa);
  return s;
}

int min_distance(const ExpandedCode& c, std::uint64_t cap) {
  if (c.k() == 0) throw PreconditionError("minimum distance of the zero code is undefined");
  const GaloisField& F = *c.field;
  const std::uint32_t q = F.order();
  std::uint64_t total = 1;
  for (int i = 0; i < c.k(); ++i) {
    total *= q;
    if (total > cap) throw PreconditionError("enumeration too large");
  }
  // Odometer over coefficient codes; each step adds (new - old) * row to the running word.
  std::vector<std::uint32_t> digit(c.k(), 0);
  std::vector<std::uint32_t> word(c.n, 0);
  int best = c.n + 1;
  while (true) {
    int i = 0;
    while (i < c.k() && digit[i] == q - 1) {
      const std::uint32_t delta = F.neg(q - 1);
      for (int j = 0; j < c.n; ++j) word[j] = F.add(word[j], F.mul(delta, c.rows[i][j]));
      digit[i] = 0;
      ++i;
    }
    if (i == c.k()) break;
    const std::uint32_t delta = F.sub(digit[i] + 1, digit[i]);
    for (int j = 0; j < c.n; ++j) word[j] = F.add(word[j], F.mul(delta, c.rows[i][j]));
    ++digit[i];
    const int w = static_cast<int>(std::count_if(word.begin(), word.end(), [](std::uint32_t a) { return a != 0; }));
    best = std::min(best, w);
  }
  return best;
}

}  // namespace mtdual::oracle

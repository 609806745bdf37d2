#include "mtdual/polymat.hpp"

#include <algorithm>
#include <sstream>

#include "mtdual/error.hpp"

namespace mtdual {

PolyMatrix::PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (!field_) throw PreconditionError("matrix requires a field");
  entries_.assign(rows * cols, Poly(field_));
}

PolyMatrix::PolyMatrix(FieldPtr field, const std::vector<std::vector<Poly>>& rows, std::size_t cols)
    : PolyMatrix(std::move(field), rows.size(), cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!rows[i][j].field().same_as(*field_)) throw PreconditionError("matrix entry from a different field");
      at(i, j) = rows[i][j];
    }
  }
}

PolyMatrix PolyMatrix::identity(FieldPtr field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(field, field->one());
  return m;
}

PolyMatrix PolyMatrix::diagonal(FieldPtr field, const std::vector<Poly>& diag) {
  PolyMatrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

PolyMatrix PolyMatrix::parse(FieldPtr field, std::string_view text) {
  std::vector<std::vector<Poly>> rows;
  std::size_t cols = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::vector<Poly> row;
    std::size_t start = 0;
    while (true) {
      const auto bar = line.find('|', start);
      row.push_back(Poly::parse(field, line.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                                                         : bar - start)));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (!rows.empty() && row.size() != cols) throw ParseError("ragged matrix text block");
    cols = row.size();
    rows.push_back(std::move(row));
  }
  return PolyMatrix(field, rows, cols);
}

std::vector<Poly> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void PolyMatrix::check_same_field(const PolyMatrix& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw PreconditionError("matrices over different fields");
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  check_same_field(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch in addition");
  PolyMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += rhs.entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
  check_same_field(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix shape mismatch in subtraction");
  PolyMatrix r = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] -= rhs.entries_[k];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  check_same_field(rhs);
  if (cols_ != rhs.rows_) throw PreconditionError("matrix shape mismatch in multiplication");
  PolyMatrix r(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Poly& b = rhs.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_->same_as(*rhs.field_) && entries_ == rhs.entries_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::row_block(std::size_t first, std::size_t count) const {
  return block(first, 0, count, cols_);
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("submatrix out of range");
  PolyMatrix r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
  check_same_field(below);
  if (cols_ != below.cols_) throw PreconditionError("column mismatch when stacking matrices");
  PolyMatrix r(field_, rows_ + below.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), r.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(),
            r.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& f) { return f.is_zero(); });
}

bool PolyMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

bool PolyMatrix::is_over_subfield(int upsilon) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const Poly& f) { return f.is_over_subfield(upsilon); });
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += " | ";
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) { return os << m.to_string(); }

void PolyMatrix::add_row_multiple(std::size_t target, std::size_t source, const Poly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Poly& s = at(source, j);
    if (!s.is_zero()) at(target, j) += factor * s;
  }
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void PolyMatrix::scale_row(std::size_t i, const FieldElement& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = at(i, j).scaled(c);
}

std::string LaurentMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) out += " | ";
      out += at(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

HNFResult hermite_normal_form(const PolyMatrix& m) {
  PolyMatrix h = m;
  PolyMatrix u = PolyMatrix::identity(m.field_ptr(), m.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i) {
        const Poly& f = h.at(i, j);
        if (f.is_zero()) continue;
        if (best == m.rows() || f.degree() < h.at(best, j).degree()) best = i;
      }
      if (best == m.rows()) break;
      has_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (h.at(i, j).is_zero()) continue;
        auto [q, rem] = divmod(h.at(i, j), h.at(r, j));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (!rem.is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    const FieldElement lead_inv = h.at(r, j).leading().inverse();
    h.scale_row(r, lead_inv);
    u.scale_row(r, lead_inv);
    for (std::size_t i = 0; i < r; ++i) {
      if (h.at(i, j).is_zero()) continue;
      const Poly q = divmod(h.at(i, j), h.at(r, j)).quotient;
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  if (m.is_square() && r < m.cols())
    throw PreconditionError("square polynomial matrix is rank deficient (rank " + std::to_string(r) + " < " +
                            std::to_string(m.cols()) + ")");
  return {std::move(h), std::move(u), r};
}

PolyMatrix reduced_basis(const PolyMatrix& stack) {
  HNFResult res = hermite_normal_form(stack);
  if (res.rank < stack.cols())
    throw PreconditionError("generator stack does not have full column rank");
  PolyMatrix top = res.hnf.row_block(0, stack.cols());
  if (!top.is_upper_triangular()) throw InvariantError("reduced basis is not upper triangular");
  return top;
}

Poly determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const FieldPtr& F = m.field_ptr();
  const std::size_t n = m.rows();
  Poly one = Poly::constant(F, F->one());
  if (n == 0) return one;
  if (m.is_upper_triangular() || m.transpose().is_upper_triangular()) {
    Poly d = one;
    for (std::size_t i = 0; i < n; ++i) d *= m.at(i, i);
    return d;
  }
  // Bareiss fraction-free elimination; every division is exact.
  PolyMatrix a = m;
  Poly prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly(F);
      a.swap_rows(k, piv);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        auto [q, rem] = divmod(num, prev);
        if (!rem.is_zero()) throw InvariantError("inexact division in fraction-free determinant");
        a.at(i, j) = std::move(q);
      }
      a.at(i, k) = Poly(F);
    }
    prev = a.at(k, k);
  }
  Poly d = a.at(n - 1, n - 1);
  return negate ? -d : d;
}

std::optional<PolyMatrix> try_solve_left_factor(const PolyMatrix& g, const PolyMatrix& d) {
  if (!g.is_square() || !g.is_upper_triangular())
    throw PreconditionError("left-factor solve needs a square upper triangular matrix");
  if (d.cols() != g.cols()) throw PreconditionError("column mismatch in left-factor solve");
  const std::size_t n = g.cols();
  for (std::size_t j = 0; j < n; ++j)
    if (g.at(j, j).is_zero()) throw PreconditionError("left-factor solve needs a nonzero diagonal");
  PolyMatrix a(g.field_ptr(), d.rows(), n);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly acc = d.at(i, j);
      for (std::size_t h = 0; h < j; ++h)
        if (!a.at(i, h).is_zero() && !g.at(h, j).is_zero()) acc -= a.at(i, h) * g.at(h, j);
      auto [q, rem] = divmod(acc, g.at(j, j));
      if (!rem.is_zero()) return std::nullopt;
      a.at(i, j) = std::move(q);
    }
  }
  return a;
}

PolyMatrix solve_left_factor(const PolyMatrix& g, const PolyMatrix& d) {
  auto a = try_solve_left_factor(g, d);
  if (!a) throw PreconditionError("d not in row module of g");
  return *std::move(a);
}

PolyMatrix frobenius_matrix(const PolyMatrix& m, long long mu) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).frobenius(mu);
  return r;
}

PolyMatrix trace_matrix(const PolyMatrix& m, int upsilon) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).trace(upsilon);
  return r;
}

}  // namespace mtdual

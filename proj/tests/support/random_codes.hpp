#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtdual/mtcode.hpp"

namespace mtdual::testing {

inline std::string fixture(const std::string& name) { return std::string(MTDUAL_FIXTURE_DIR) + "/" + name; }

/// GF(q) for the small orders used in tests.
inline FieldPtr small_field(std::uint32_t q) {
  switch (q) {
    case 2: return GaloisField::prime(2);
    case 3: return GaloisField::prime(3);
    case 4: return GaloisField::create(2, {1, 1, 1});
    case 5: return GaloisField::prime(5);
    case 8: return GaloisField::create(2, {1, 1, 0, 1});
    case 9: return GaloisField::create(3, {2, 2, 1});
    case 16: return GaloisField::create(2, {1, 1, 0, 0, 1}, std::vector<std::uint32_t>{0, 1, 0, 0});
    case 27: return GaloisField::create(3, {1, 2, 0, 1});
    case 64: return GaloisField::create(2, {1, 1, 0, 0, 0, 0, 1});
    case 81: return GaloisField::create(3, {2, 1, 0, 0, 1}, std::vector<std::uint32_t>{0, 1, 0, 0});
  }
  throw std::invalid_argument("no test field of order " + std::to_string(q));
}

inline FieldElement random_element(const FieldPtr& F, std::mt19937_64& rng) {
  return F->element(static_cast<std::uint32_t>(rng() % F->order()));
}

inline FieldElement random_nonzero(const FieldPtr& F, std::mt19937_64& rng) {
  return F->element(1 + static_cast<std::uint32_t>(rng() % (F->order() - 1)));
}

/// Random polynomial of degree < bound (possibly zero).
inline Poly random_poly(const FieldPtr& F, int bound, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c;
  for (int i = 0; i < bound; ++i) c.push_back(random_element(F, rng).code());
  return Poly(F, std::move(c));
}

inline Poly random_monic(const FieldPtr& F, int degree, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_element(F, rng).code());
  c.push_back(1);
  return Poly(F, std::move(c));
}

/// A random code of the given shape. Rows are products of a random monic
/// factor and a random vector, so the dimensions spread over the full range.
inline MTCode random_code(const FieldPtr& F, const std::vector<FieldElement>& shifts, const std::vector<int>& m,
                          std::mt19937_64& rng) {
  const std::size_t ell = m.size();
  const int max_m = *std::max_element(m.begin(), m.end());
  const std::size_t count = rng() % (ell + 2);
  std::vector<PolyVector> rows;
  for (std::size_t r = 0; r < count; ++r) {
    const Poly f = random_monic(F, static_cast<int>(rng() % (max_m + 1)), rng);
    PolyVector row;
    for (std::size_t j = 0; j < ell; ++j) row.push_back(rng() % 3 == 0 ? Poly(F) : f * random_poly(F, m[j], rng));
    rows.push_back(std::move(row));
  }
  return MTCode::from_generator_rows(F, rows, shifts, m);
}

inline MTCode random_code(const FieldPtr& F, std::size_t ell, int max_m, std::mt19937_64& rng) {
  std::vector<FieldElement> shifts;
  std::vector<int> m;
  for (std::size_t j = 0; j < ell; ++j) {
    shifts.push_back(random_nonzero(F, rng));
    m.push_back(1 + static_cast<int>(rng() % max_m));
  }
  return random_code(F, shifts, m, rng);
}

/// Every nonzero element of the subfield F_{p^upsilon}.
inline std::vector<FieldElement> subfield_units(const FieldPtr& F, int upsilon) {
  std::vector<FieldElement> out;
  for (std::uint32_t c = 1; c < F->order(); ++c)
    if (F->element(c).in_subfield(upsilon)) out.push_back(F->element(c));
  return out;
}

}  // namespace mtdual::testing

#include "reglab/exact_linalg.hpp"

#include <algorithm>

namespace reglab {

namespace {

std::size_t width(const RationalMatrix& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.size());
  return w;
}

void pad(RationalMatrix& rows, std::size_t w) {
  for (auto& r : rows) r.resize(w);
}

}  // namespace

int exact_rank(RationalMatrix rows) {
  const std::size_t w = width(rows);
  pad(rows, w);
  int rank = 0;
  for (std::size_t col = 0; col < w && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return sgn(r[col]) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col] / p[col];
      for (std::size_t k = col; k < w; ++k) rows[i][k] -= f * p[k];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rational>> solve_in_span(const RationalMatrix& rows, const std::vector<Rational>& target) {
  // Solve M^T c = target where M has the given rows: augmented system with
  // one equation per column of M.
  const std::size_t w = std::max(width(rows), target.size());
  const std::size_t n = rows.size();
  RationalMatrix aug(w, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rows[i].size(); ++k) aug[k][i] = rows[i][k];
  }
  for (std::size_t k = 0; k < target.size(); ++k) aug[k][n] = target[k];

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < w; ++col) {
    std::size_t piv = r;
    while (piv < w && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == w) continue;
    std::swap(aug[r], aug[piv]);
    const Rational inv = 1 / aug[r][col];
    for (auto& v : aug[r]) v *= inv;
    for (std::size_t i = 0; i < w; ++i) {
      if (i == r || sgn(aug[i][col]) == 0) continue;
      const Rational f = aug[i][col];
      for (std::size_t k = col; k <= n; ++k) aug[i][k] -= f * aug[r][k];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < w; ++i) {
    if (sgn(aug[i][n]) != 0) return std::nullopt;
  }
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) c[pivot_cols[i]] = aug[i][n];
  return c;
}

RationalMatrix coefficient_rows(const std::vector<Polynomial>& polys) {
  int deg = 0;
  for (const auto& p : polys) deg = std::max(deg, p.degree());
  RationalMatrix out;
  for (const auto& p : polys) {
    std::vector<Rational> row(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= p.degree(); ++k) row[static_cast<std::size_t>(k)] = p.coefficient(k);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace reglab

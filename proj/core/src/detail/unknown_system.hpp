#pragma once

// Internal helper shared by the solver implementations: a linear system in
// the entries of one unknown matrix, assembled row by row and solved exactly.
// Not part of the installed interface.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hopfgal/linalg.hpp"
#include "hopfgal/matrix.hpp"

namespace hopfgal::detail {

// Linear system in the entries of an unknown matrix X with fixed shape,
// flattened column by column (entry X(p,q) has index q·rows_x + p).
struct UnknownSystem {
  const Field& f;
  std::size_t rows_x, cols_x;
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;

  UnknownSystem(const Field& field, std::size_t rx, std::size_t cx)
      : f(field), rows_x(rx), cols_x(cx) {}

  // Adds the equations  Σ_q coeff_q · X.col(q) = b  where coeff ranges over
  // the given column-indexed coefficient matrices.
  void add_block(const std::vector<std::pair<std::size_t, Matrix>>& terms,
                 const Vec& b) {
    std::size_t out = b.size();
    for (std::size_t i = 0; i < out; ++i) {
      Vec row = vec_zero(rows_x * cols_x);
      for (const auto& [q, coeff] : terms)
        for (std::size_t p = 0; p < rows_x; ++p)
          row[q * rows_x + p] = f.add(row[q * rows_x + p], coeff.at(i, p));
      rows.push_back(std::move(row));
      rhs.push_back(b[i]);
    }
  }

  // X·F = G·X for fixed F on the source and G on the target.
  void add_intertwine(const Matrix& h_side, const Matrix& target_side) {
    for (std::size_t k = 0; k < cols_x; ++k) {
      std::vector<std::pair<std::size_t, Matrix>> terms;
      Matrix at_k = target_side.scaled(f.neg(f.one()));
      for (std::size_t u = 0; u < cols_x; ++u) {
        if (f.is_zero(h_side.at(u, k))) continue;
        if (u == k) {
          at_k = at_k + Matrix::identity(f, rows_x).scaled(h_side.at(u, k));
        } else {
          terms.emplace_back(u, Matrix::identity(f, rows_x).scaled(h_side.at(u, k)));
        }
      }
      terms.emplace_back(k, std::move(at_k));
      add_block(terms, vec_zero(rows_x));
    }
  }

  // X·v = 0 for a fixed source vector v (used to force balance relations).
  void add_kill(const Vec& v) {
    std::vector<std::pair<std::size_t, Matrix>> terms;
    for (std::size_t q = 0; q < cols_x; ++q) {
      if (f.is_zero(v[q])) continue;
      terms.emplace_back(q, Matrix::identity(f, rows_x).scaled(v[q]));
    }
    add_block(terms, vec_zero(rows_x));
  }

  std::optional<Matrix> solve() const {
    Matrix m = Matrix::from_row_vecs(f, rows_x * cols_x, rows);
    std::optional<Vec> sol = solve_linear(m, rhs);
    if (!sol) return std::nullopt;
    return Matrix::from_columns(f, rows_x, cols_x, [&](std::size_t q) {
      Vec col = vec_zero(rows_x);
      for (std::size_t p = 0; p < rows_x; ++p) col[p] = (*sol)[q * rows_x + p];
      return col;
    });
  }
};

}  // namespace hopfgal::detail

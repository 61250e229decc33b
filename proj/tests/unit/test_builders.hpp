#pragma once

// Hand-built instances used as independent fixtures across the unit tests.
// These are written from first principles (explicit structure constants), so
// they double as oracles for the library's own constructors.

#include "hopfgal/bialgebroid.hpp"

namespace hopfgal::testing {

inline Algebra cyclic_group_algebra(const Field& f, std::size_t n) {
  Algebra a(f, n);
  for (std::size_t i = 0; i < n; ++i) a.labels[i] = "g" + std::to_string(i);
  a.unit = vec_basis(n, 0);
  a.mult = from_bilinear(f, n, n, n, [&](std::size_t i, std::size_t j) {
    return vec_basis(n, (i + j) % n);
  });
  return a;
}

// k[x]/(x²) — the rank-one square-zero extension.
inline Algebra dual_numbers(const Field& f) {
  Algebra a(f, 2);
  a.labels = {"1", "x"};
  a.unit = vec_basis(2, 0);
  a.mult = from_bilinear(f, 2, 2, 2, [&](std::size_t i, std::size_t j) {
    return (i + j < 2) ? vec_basis(2, i + j) : vec_zero(2);
  });
  return a;
}

inline Algebra trivial_base(const Field& f) {
  Algebra a(f, 1);
  a.labels = {"1"};
  a.unit = vec_basis(1, 0);
  a.mult = from_bilinear(f, 1, 1, 1,
                         [&](std::size_t, std::size_t) { return vec_basis(1, 0); });
  return a;
}

// Group bialgebra of C_n as a left bialgebroid over the trivial base:
// γ(gⁱ) = gⁱ⊗gⁱ, π(gⁱ) = 1.
inline LeftBialgebroid cyclic_left_bialgebroid(const Field& f, std::size_t n) {
  Algebra h = cyclic_group_algebra(f, n);
  Algebra base = trivial_base(f);
  Matrix unit_col(f, n, 1);
  unit_col.set_col(0, h.unit);
  Matrix coproduct(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    coproduct.set_col(i, vec_kron(f, vec_basis(n, i), vec_basis(n, i)));
  Matrix counit(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) counit.at(0, i) = f.one();
  return make_left_bialgebroid(h, base, unit_col, unit_col, coproduct, counit);
}

// The enveloping bialgebroid L⊗L^op for L = k[x]/(x²): total basis
// e_{ij} = xⁱ⊗xʲ at index 2i+j, s(l) = l⊗1, t(l) = 1⊗l,
// γ(xⁱ⊗xʲ) = (xⁱ⊗1)⊗(1⊗xʲ), π(xⁱ⊗xʲ) = xⁱ⁺ʲ.
inline LeftBialgebroid enveloping_bialgebroid(const Field& f) {
  Algebra base = dual_numbers(f);
  Algebra h = tensor_algebra(base, opposite(base));
  Matrix src(f, 4, 2), tgt(f, 4, 2);
  src.set_col(0, vec_basis(4, 0));
  src.set_col(1, vec_basis(4, 2));  // x⊗1
  tgt.set_col(0, vec_basis(4, 0));
  tgt.set_col(1, vec_basis(4, 1));  // 1⊗x
  Matrix coproduct(f, 16, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      coproduct.set_col(2 * i + j,
                        vec_kron(f, vec_basis(4, 2 * i), vec_basis(4, j)));
  Matrix counit(f, 2, 4);
  counit.at(0, 0) = f.one();  // π(1⊗1) = 1
  counit.at(1, 1) = f.one();  // π(1⊗x) = x
  counit.at(1, 2) = f.one();  // π(x⊗1) = x
  return make_left_bialgebroid(h, base, src, tgt, coproduct, counit);
}

}  // namespace hopfgal::testing

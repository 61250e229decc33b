#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/errors.hpp"

namespace hopfgal {

// A scalar is always held as an mpq_class.  Over the rationals it is an
// arbitrary canonical fraction; over a prime field it is an integer
// representative in [0, p).  All arithmetic goes through a Field so the
// prime-field reduction can never be forgotten.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

enum class FieldKind { rationals, prime };

class Field {
 public:
  static Field rationals();
  // p must be a prime below 2^31; throws Error otherwise.
  static Field prime(unsigned long p);

  FieldKind kind() const { return kind_; }
  // 0 for the rationals, p for F_p.
  unsigned long characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return from_long(1); }
  Scalar from_long(long v) const;
  // Reduce an arbitrary rational into canonical form (mod-p for prime
  // fields; throws if the denominator vanishes mod p).
  Scalar canon(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws Error on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == one(); }

  // Canonical text form: rationals as "n" or "n/d" (d > 1, gcd = 1),
  // prime-field values as the decimal representative in [0, p).
  std::string to_string(const Scalar& a) const;
  // Strict parse of the canonical form; rejects anything to_string would
  // not produce (so files round-trip byte for byte).
  std::optional<Scalar> parse(const std::string& text) const;

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  // "q" or "fp:<p>", as used by the CLI --field flag.
  std::string describe() const;
  static std::optional<Field> from_description(const std::string& text);

 private:
  Field(FieldKind kind, unsigned long p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  unsigned long p_;
};

// Vector helpers (field-aware where arithmetic is involved).
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& a);
Vec vec_zero(std::size_t n);
Vec vec_basis(std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& a);
// Kronecker product, lexicographic in (left index, right index).
Vec vec_kron(const Field& f, const Vec& a, const Vec& b);

// Iterate the nonzero entries of a vector.
template <typename Fn>
void for_each_nonzero(const Vec& v, Fn&& fn) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) fn(i, v[i]);
  }
}

}  // namespace hopfgal

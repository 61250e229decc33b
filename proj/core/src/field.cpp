#include "hopfgal/field.hpp"

#include <cctype>

namespace hopfgal {

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(unsigned long p) {
  if (p >= (1ul << 31)) throw Error("prime field modulus too large: " + std::to_string(p));
  mpz_class m(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw Error("not a prime: " + std::to_string(p));
  return Field(FieldKind::prime, p);
}

Scalar Field::from_long(long v) const {
  if (kind_ == FieldKind::rationals) return Scalar(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar(r);
}

Scalar Field::canon(const Scalar& v) const {
  if (kind_ == FieldKind::rationals) return v;
  mpz_class p(p_);
  mpz_class den = v.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw Error("denominator not invertible mod " + std::to_string(p_));
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  if (den != 1) {
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("denominator not invertible mod " + std::to_string(p_));
    num = (num * deninv) % p;
  }
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::rationals) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  mpz_class p(p_);
  r %= p;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::rationals) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  mpz_class p(p_);
  r %= p;
  if (r < 0) r += p;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::rationals) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  mpz_class p(p_);
  r %= p;
  return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == FieldKind::rationals) return -a;
  if (sgn(a) == 0) return a;
  mpz_class r = mpz_class(p_) - a.get_num();
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw Error("division by zero");
  if (kind_ == FieldKind::rationals) return Scalar(1) / a;
  mpz_class r, p(p_);
  if (mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("not invertible mod " + std::to_string(p_));
  return Scalar(r);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::to_string(const Scalar& a) const { return a.get_str(); }

std::optional<Scalar> Field::parse(const std::string& text) const {
  if (text.empty()) return std::nullopt;
  // Manual strict scan: optional '-', nonempty digit run without a leading
  // zero (except "0" itself), optionally "/" and a second digit run.
  auto scan_digits = [](const std::string& s, std::size_t& i) -> std::optional<std::string> {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return std::nullopt;
    std::string d = s.substr(start, i - start);
    if (d.size() > 1 && d[0] == '0') return std::nullopt;
    return d;
  };
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  auto num = scan_digits(text, i);
  if (!num) return std::nullopt;
  std::string den;
  if (i < text.size() && text[i] == '/') {
    ++i;
    auto d = scan_digits(text, i);
    if (!d) return std::nullopt;
    den = *d;
  }
  if (i != text.size()) return std::nullopt;
  if (negative && *num == "0") return std::nullopt;  // no "-0"
  if (kind_ == FieldKind::prime) {
    if (negative || !den.empty()) return std::nullopt;
    mpz_class v(*num);
    if (v >= mpz_class(p_)) return std::nullopt;
    return Scalar(v);
  }
  if (den.empty()) {
    mpz_class v(*num);
    return Scalar(negative ? -v : v);
  }
  mpz_class n(*num), d(den);
  if (d <= 1) return std::nullopt;  // "x/0" and "x/1" are not canonical
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return std::nullopt;
  Scalar v(negative ? -n : n, d);
  v.canonicalize();
  return v;
}

std::string Field::describe() const {
  if (kind_ == FieldKind::rationals) return "q";
  return "fp:" + std::to_string(p_);
}

std::optional<Field> Field::from_description(const std::string& text) {
  if (text == "q") return Field::rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty()) return std::nullopt;
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    try {
      return Field::prime(std::stoul(digits));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

Vec vec_zero(std::size_t n) { return Vec(n, Scalar(0)); }

Vec vec_basis(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("vec_basis: index out of range");
  Vec r(n, Scalar(0));
  r[i] = Scalar(1);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Vec vec_kron(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size(), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      r[i * b.size() + j] = f.mul(a[i], b[j]);
    }
  }
  return r;
}

}  // namespace hopfgal

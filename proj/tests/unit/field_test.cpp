#include <doctest.h>

#include "hopfgal/errors.hpp"
#include "hopfgal/field.hpp"

using namespace hopfgal;

TEST_CASE("rational field arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = *q.parse("2/3");
  Scalar b = *q.parse("-1/6");
  CHECK(q.to_string(q.add(a, b)) == "1/2");
  CHECK(q.to_string(q.mul(a, b)) == "-1/9");
  CHECK(q.to_string(q.inv(a)) == "3/2");
  CHECK(q.to_string(q.sub(a, a)) == "0");
  // No floating error: (1/3)*3 == 1 exactly.
  Scalar third = q.inv(q.from_long(3));
  CHECK(q.is_one(q.mul(third, q.from_long(3))));
}

TEST_CASE("prime field arithmetic reduces canonically") {
  Field f5 = Field::prime(5);
  Scalar a = f5.from_long(7);  // ≡ 2
  CHECK(f5.to_string(a) == "2");
  CHECK(f5.to_string(f5.add(a, f5.from_long(4))) == "1");
  CHECK(f5.to_string(f5.neg(f5.from_long(1))) == "4");
  CHECK(f5.to_string(f5.inv(f5.from_long(2))) == "3");  // 2·3 = 6 ≡ 1
  CHECK(f5.is_one(f5.mul(f5.from_long(2), f5.from_long(3))));
  CHECK_THROWS_AS((void)f5.inv(f5.zero()), Error);
}

TEST_CASE("prime field validates the modulus") {
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(1000003));
}

TEST_CASE("scalar parsing is strict and canonical") {
  Field q = Field::rationals();
  CHECK(q.to_string(*q.parse("-7/2")) == "-7/2");
  CHECK(!q.parse("2/4"));   // not reduced
  CHECK(!q.parse("1/1"));   // denominator 1 spelled out
  CHECK(!q.parse("-0"));    // negative zero
  CHECK(!q.parse("01"));    // leading zero
  CHECK(!q.parse(""));
  CHECK(!q.parse("1.5"));   // decimals rejected
  Field f5 = Field::prime(5);
  CHECK(*f5.parse("3") == f5.from_long(3));
  CHECK(!f5.parse("5"));    // out of range
  CHECK(!f5.parse("-1"));   // signs rejected mod p
  CHECK(!f5.parse("1/2"));  // fractions rejected mod p
}

TEST_CASE("round trip: to_string then parse is the identity") {
  Field q = Field::rationals();
  for (long n = -6; n <= 6; ++n)
    for (long d = 1; d <= 5; ++d) {
      Scalar s = q.div(q.from_long(n), q.from_long(d));
      CHECK(*q.parse(q.to_string(s)) == s);
    }
  Field f7 = Field::prime(7);
  for (long n = 0; n < 7; ++n) {
    Scalar s = f7.from_long(n);
    CHECK(*f7.parse(f7.to_string(s)) == s);
  }
}

TEST_CASE("field descriptions round trip") {
  CHECK(*Field::from_description("q") == Field::rationals());
  CHECK(*Field::from_description("fp:5") == Field::prime(5));
  CHECK(Field::rationals().describe() == "q");
  CHECK(Field::prime(11).describe() == "fp:11");
  CHECK(!Field::from_description("fp:abc"));
  CHECK(!Field::from_description("r"));
}

TEST_CASE("vector kron uses lexicographic index order") {
  Field q = Field::rationals();
  Vec a = {q.from_long(1), q.from_long(2)};
  Vec b = {q.from_long(3), q.from_long(5), q.from_long(7)};
  Vec k = vec_kron(q, a, b);
  REQUIRE(k.size() == 6);
  // index i·|b| + j
  CHECK(k[0] == q.from_long(3));
  CHECK(k[2] == q.from_long(7));
  CHECK(k[3] == q.from_long(6));
  CHECK(k[5] == q.from_long(14));
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "modata/exactnum.hpp"

using namespace modata;

namespace {

QuadNum q(long a, long ad, long b, long bd, long d) { return QuadNum(rat(a, ad), rat(b, bd), d); }

const QuadNum zeta3 = q(-1, 2, 1, 2, -3);

struct Rng {
  std::mt19937_64 gen{20240611};
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rational small_rat() { return rat(uniform(-9, 9), uniform(1, 6)); }
  QuadNum element(long d) { return QuadNum(small_rat(), small_rat(), d); }
};

const long kDiscs[] = {2, 3, 5, 6, 7, 17, -1, -2, -3, -7, -15};

}  // namespace

TEST(QuadNum, NormOfOnePlusSqrt2) { EXPECT_EQ(q(1, 1, 1, 1, 2) * q(1, 1, -1, 1, 2), QuadNum(-1)); }

TEST(QuadNum, Zeta3SquaredIsConjugate) {
  EXPECT_EQ(zeta3 * zeta3, zeta3.conj());
  EXPECT_EQ(zeta3 * zeta3 * zeta3, QuadNum(1));
}

TEST(QuadNum, SeventeenPairSum) {
  EXPECT_EQ(q(-3, 4, 1, 4, 17) + q(-3, 4, -1, 4, 17), QuadNum(rat(-3, 2)));
}

TEST(QuadNum, CanonicalForms) {
  EXPECT_EQ(QuadNum(0, 1, 8), q(0, 1, 2, 1, 2));
  EXPECT_EQ(QuadNum(0, 3, 4), QuadNum(6));
  EXPECT_TRUE(QuadNum(0, 3, 4).is_rational());
  EXPECT_EQ(QuadNum(5, 0, 7).disc(), 0);
  EXPECT_EQ(QuadNum(0, 1, -12), q(0, 1, 2, 1, -3));
  EXPECT_EQ(q(1, 2, 1, 3, 5) - q(1, 2, 1, 3, 5), QuadNum(0));
  EXPECT_EQ((q(1, 2, 1, 3, 5) - q(0, 1, 1, 3, 5)).disc(), 0);
}

TEST(QuadNum, Errors) {
  EXPECT_THROW(QuadNum::surd(2) + QuadNum::surd(3), DiscMismatch);
  EXPECT_THROW(QuadNum::surd(2) / QuadNum(0), DivisionByZero);
  EXPECT_NO_THROW(QuadNum::surd(2) + QuadNum(rat(1, 2)));
  EXPECT_THROW(rat(1, 0), DivisionByZero);
}

TEST(QuadNum, AbsSquared) {
  EXPECT_EQ(abs_squared(QuadNum::surd(2)), QuadNum(2));
  EXPECT_EQ(abs_squared(zeta3), QuadNum(1));
  EXPECT_EQ(abs_squared(q(-1, 2, 1, 2, -3)), QuadNum(1));  // k = 1
  EXPECT_EQ(abs_squared(QuadNum::surd(-1)), QuadNum(1));
  EXPECT_EQ(abs_squared(q(1, 1, 1, 1, 2)), q(3, 1, 2, 1, 2));
}

TEST(QuadNum, IntegralityPredicates) {
  EXPECT_TRUE(is_rational_integer(QuadNum(4)));
  EXPECT_FALSE(is_rational_integer(QuadNum(rat(3, 2))));
  EXPECT_FALSE(is_rational_integer(q(0, 1, 2, 3, 3)));
  EXPECT_TRUE(is_algebraic_integer(zeta3));
  EXPECT_FALSE(is_algebraic_integer(q(-3, 4, 1, 4, 17)));
  EXPECT_TRUE(is_algebraic_integer(QuadNum::surd(2)));
  EXPECT_TRUE(is_algebraic_integer(q(1, 2, 1, 2, 5)));
  EXPECT_FALSE(is_algebraic_integer(q(1, 2, 1, 2, 3)));
  EXPECT_FALSE(is_algebraic_integer(QuadNum(rat(1, 2))));
}

TEST(QuadNum, SqrtInField) {
  EXPECT_EQ(sqrt_in_field(4, 7), QuadNum(2));
  EXPECT_EQ(sqrt_in_field(4, 0), QuadNum(2));
  EXPECT_EQ(sqrt_in_field(2, 2), QuadNum::surd(2));
  EXPECT_EQ(sqrt_in_field(rat(1, 2), 2), q(0, 1, 1, 2, 2));
  EXPECT_EQ(sqrt_in_field(12, 3), q(0, 1, 2, 1, 3));
  EXPECT_FALSE(sqrt_in_field(3, 2).has_value());
  EXPECT_FALSE(sqrt_in_field(3, -3).has_value());
  EXPECT_FALSE(sqrt_in_field(0, 2).has_value());
}

TEST(QuadNum, OrderRealAndImaginary) {
  EXPECT_LT(compare(QuadNum::surd(2), QuadNum(rat(3, 2))), 0);
  EXPECT_GT(compare(q(1, 1, -1, 1, 2), QuadNum(rat(-1, 2))), 0);
  EXPECT_LT(compare(q(1, 1, -1, 1, 2), QuadNum(rat(-2, 5))), 0);
  EXPECT_LT(compare(zeta3, zeta3.conj()) * -1, 0);
  EXPECT_LT(compare(zeta3.conj(), zeta3), 0);
  EXPECT_EQ(QuadNum::surd(2).sign(), 1);
  EXPECT_THROW(zeta3.sign(), Error);
}

TEST(QuadNum, OrderMatchesSignOfDifferenceOracle) {
  // Oracle: sign(a + b r) decided by comparing a^2 and d b^2 with signs.
  Rng rng;
  for (int it = 0; it < 500; ++it) {
    long d = kDiscs[rng.uniform(0, 5)];
    QuadNum x = rng.element(d), y = rng.element(d);
    QuadNum diff = x - y;
    Rational a = diff.rational_part(), b = diff.surd_part();
    int expect;
    if (b == 0) expect = sgn(a);
    else if (a == 0) expect = sgn(b);
    else if (sgn(a) == sgn(b)) expect = sgn(a);
    else expect = (a * a > b * b * d) ? sgn(a) : sgn(b);
    EXPECT_EQ(compare(x, y), expect);
    EXPECT_EQ(compare(y, x), -expect);
  }
}

TEST(QuadNumProperty, FieldAxioms) {
  Rng rng;
  for (int it = 0; it < 1000; ++it) {
    long d = kDiscs[rng.uniform(0, 10)];
    QuadNum x = rng.element(d), y = rng.element(d), z = rng.element(d);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    if (!x.is_zero()) {
      ASSERT_EQ(x * (QuadNum(1) / x), QuadNum(1));
    }
    if (!y.is_zero()) {
      ASSERT_EQ((x / y) * y, x);
    }
  }
}

TEST(QuadNumProperty, ConjugationMultiplicative) {
  Rng rng;
  for (int it = 0; it < 1000; ++it) {
    long d = kDiscs[rng.uniform(0, 10)];
    QuadNum x = rng.element(d), y = rng.element(d);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_EQ((x + y).conj(), x.conj() + y.conj());
    ASSERT_EQ((x * y).complex_conj(), x.complex_conj() * y.complex_conj());
    ASSERT_EQ(abs_squared(x * y), abs_squared(x) * abs_squared(y));
    if (d < 0) {
      ASSERT_TRUE(abs_squared(x).is_rational());
    }
  }
}

TEST(QuadNumProperty, AlgebraicIntegersFormARing) {
  // Oracle: the ring of integers has basis {1, w} with w = sqrt d or (1 + sqrt d)/2.
  Rng rng;
  auto make = [](long d, long x, long y) {
    if (((d % 4) + 4) % 4 == 1) return QuadNum(rat(2 * x + y, 2), rat(y, 2), d);
    return QuadNum(Rational(x), Rational(y), d);
  };
  for (int it = 0; it < 1000; ++it) {
    long d = kDiscs[rng.uniform(0, 10)];
    QuadNum u = make(d, rng.uniform(-20, 20), rng.uniform(-20, 20));
    QuadNum v = make(d, rng.uniform(-20, 20), rng.uniform(-20, 20));
    ASSERT_TRUE(is_algebraic_integer(u));
    ASSERT_TRUE(is_algebraic_integer(u + v));
    ASSERT_TRUE(is_algebraic_integer(u * v));
    ASSERT_TRUE(is_algebraic_integer(u - v));
    QuadNum half = u + QuadNum(rat(1, 2));
    ASSERT_FALSE(is_algebraic_integer(half));
  }
}

TEST(Polynomial, ArithmeticAndDivision) {
  Polynomial p{-2, 0, 1};
  Polynomial d{-1, 1};
  auto [qq, r] = (p * d + Polynomial{3}).divmod(d);
  EXPECT_EQ(qq, p);
  EXPECT_EQ(r, Polynomial{3});
  EXPECT_EQ(p.derivative(), (Polynomial{0, 2}));
  EXPECT_EQ(gcd(p * d, d * Polynomial{1, 1}), d);
  EXPECT_EQ(Polynomial({0, 0, 0, 1}).squarefree(), (Polynomial{0, 1}));
  EXPECT_EQ(p.eval(QuadNum::surd(2)), QuadNum(0));
}

TEST(Polynomial, RationalAndQuadraticRoots) {
  Polynomial cubic{0, 0, 0, -1, 1};
  EXPECT_EQ(cubic.rational_roots(), (std::vector<Rational>{0, 1}));
  Polynomial p = Polynomial{-8, 0, 9} * Polynomial{-2, 3};
  EXPECT_EQ(p.rational_roots(), (std::vector<Rational>{rat(2, 3)}));
  auto qr = Polynomial{-5, 2, 3}.quadratic_roots();
  EXPECT_TRUE(qr.complete);
  EXPECT_EQ(qr.roots.size(), 2u);
  auto irr = Polynomial{-10, 4, 5}.quadratic_roots();
  ASSERT_EQ(irr.roots.size(), 2u);
  for (const auto& x : irr.roots) EXPECT_EQ(Polynomial({-10, 4, 5}).eval(x), QuadNum(0));
  EXPECT_EQ(irr.roots[0].disc(), 6);
  auto cx = Polynomial{1, 1, 1}.quadratic_roots();
  ASSERT_EQ(cx.roots.size(), 2u);
  EXPECT_EQ(cx.roots[0].disc(), -3);
  EXPECT_FALSE(Polynomial({-2, 0, 0, 1}).quadratic_roots().complete);
}

TEST(Sturm, Quartic) {
  Polynomial quartic{243, -1296, 2520, -1850, 625};
  EXPECT_EQ(count_real_roots(quartic), 0);
}

TEST(Sturm, CubicTimesU) {
  Polynomial p{0, 0, 0, -1, 1};
  EXPECT_EQ(count_real_roots(p), 2);
  EXPECT_EQ(count_real_roots(p, Rational(0), Rational(1)), 1);
  EXPECT_EQ(count_real_roots(p, Rational(-1), Rational(0)), 1);
}

TEST(Sturm, HalfOpenInterval) {
  Polynomial p{-2, 0, 1};
  EXPECT_EQ(count_real_roots(p, Rational(0), Rational(2)), 1);
  EXPECT_EQ(count_real_roots(p, std::nullopt, Rational(0)), 1);
  EXPECT_EQ(count_real_roots(Polynomial{-1, 1}, Rational(0), Rational(1)), 1);
  EXPECT_EQ(count_real_roots(Polynomial{-1, 1}, Rational(1), Rational(2)), 0);
  EXPECT_EQ(count_real_roots(Polynomial{7}), 0);
  EXPECT_THROW(count_real_roots(Polynomial()), ZeroPolynomial);
}

TEST(SturmProperty, MatchesGridSignChanges) {
  Rng rng;
  for (int it = 0; it < 200; ++it) {
    std::set<Rational> roots;
    long count = rng.uniform(1, 5);
    for (long i = 0; i < count; ++i) roots.insert(rat(rng.uniform(-15, 15), rng.uniform(1, 3)));
    Polynomial p{1};
    for (const auto& r : roots) p = p * Polynomial(std::vector<Rational>{-r, Rational(1)});
    if (rng.uniform(0, 1)) p = p * Polynomial{3, 0, 1};
    p = Rational(rng.uniform(1, 4)) * p;

    // Grid k/97 never hits a root with denominator <= 3 except integers, which are skipped.
    int changes = 0, last = 0;
    for (long k = -97 * 16; k <= 97 * 16; ++k) {
      if (k % 97 == 0) continue;
      int s = sgn(p.eval(rat(k, 97)));
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    ASSERT_EQ(count_real_roots(p), changes);
    ASSERT_EQ(count_real_roots(p), static_cast<int>(roots.size()));
    Rational lo = rat(rng.uniform(-8, 2), 2), hi = lo + rat(rng.uniform(1, 12), 3);
    int expect = 0;
    for (const auto& r : roots) expect += (r > lo && r <= hi);
    ASSERT_EQ(count_real_roots(p, lo, hi), expect);
  }
}

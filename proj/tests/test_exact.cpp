#include <gtest/gtest.h>

#include "bpfib/errors.hpp"
#include "bpfib/json_io.hpp"
#include "bpfib/mat2.hpp"
#include "bpfib/poly.hpp"
#include "bpfib/quad_ext.hpp"
#include "bpfib/rational.hpp"
#include "generators.hpp"

using namespace bpfib;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

} // namespace

TEST(Rational, ParseAndCanonicalText) {
    EXPECT_EQ(R("7").to_string(), "7");
    EXPECT_EQ(R("-42/4").to_string(), "-21/2");
    EXPECT_EQ(R("0/5").to_string(), "0");
    EXPECT_EQ(R("-6/3").to_string(), "-2");
    EXPECT_THROW(R("6/-3"), ParseError);
    EXPECT_THROW(R("1/0"), ParseError);
    EXPECT_THROW(Rational(1, 0), DivisionByZero);
    EXPECT_THROW(R(""), ParseError);
    EXPECT_THROW(R("1.5"), ParseError);
    EXPECT_THROW(R("abc"), ParseError);
    EXPECT_THROW(R("1/"), ParseError);
}

TEST(Rational, DivisionAndInverse) {
    EXPECT_THROW(Rational{1} / Rational{0}, DivisionByZero);
    EXPECT_THROW(Rational{0}.reciprocal(), DivisionByZero);
    EXPECT_THROW(inverse(Rational{0}), NotInvertible);
    EXPECT_EQ(R("-3/4").reciprocal(), R("-4/3"));
    EXPECT_EQ(R("2/3").pow(-3), R("27/8"));
    EXPECT_EQ(R("-2").pow(0), Rational{1});
}

TEST(Rational, ExactSqrt) {
    EXPECT_EQ(exact_sqrt(R("9/4")), R("3/2"));
    EXPECT_EQ(exact_sqrt(Rational{0}), Rational{0});
    EXPECT_FALSE(exact_sqrt(Rational{2}).has_value());
    EXPECT_FALSE(exact_sqrt(Rational{-4}).has_value());
}

TEST(RationalProperty, FieldAxiomsAndCanonicalForm) {
    for (int i = 0; i < 500; ++i) {
        Rational a = gen::wide_rational(), b = gen::wide_rational(), c = gen::wide_rational();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational{0});
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
        }
        Rational s = a * b - c;
        EXPECT_EQ(gcd(s.numerator(), s.denominator()), 1);
        EXPECT_GT(s.denominator(), 0);
        EXPECT_EQ(Rational::parse(s.to_string()), s);
    }
}

TEST(QuadExt, Examples) {
    const Rational D{60};
    QuadExt root(Rational{0}, Rational{1}, D);
    EXPECT_EQ(root * root, QuadExt::embed(Rational{60}, D));
    QuadExt alpha(Rational{3}, R("1/2"), D), beta(Rational{3}, R("-1/2"), D);
    EXPECT_EQ(QuadExt::embed(Rational{1}, D) * alpha, alpha);
    EXPECT_EQ(alpha * beta, QuadExt::embed(Rational{-6}, D));
    EXPECT_EQ(alpha.inverse(), QuadExt(R("-1/2"), R("1/12"), D));
    EXPECT_EQ(QuadExt::embed(Rational{1}, D).inverse(), QuadExt::embed(Rational{1}, D));
    EXPECT_THROW(QuadExt::embed(Rational{0}, D).inverse(), DivisionByZero);
    EXPECT_EQ(alpha.to_string(), "3 + 1/2√60");
}

TEST(QuadExt, MismatchedRadicands) {
    QuadExt x(Rational{1}, Rational{1}, Rational{5}), y(Rational{1}, Rational{1}, Rational{60});
    EXPECT_THROW(x + y, ContractViolation);
    EXPECT_THROW(x * y, ContractViolation);
    EXPECT_THROW(x / y, ContractViolation);
}

TEST(QuadExt, PerfectSquareRadicandHasZeroNorm) {
    // √4 stays formal; 2 − √4 has norm 0 and so no inverse.
    QuadExt z(Rational{2}, Rational{-1}, Rational{4});
    EXPECT_TRUE(z.norm().is_zero());
    EXPECT_THROW(z.inverse(), DivisionByZero);
}

TEST(QuadExtProperty, RingLaws) {
    for (int i = 0; i < 300; ++i) {
        Rational D = gen::nonzero_rational(30);
        QuadExt x(gen::rational(), gen::rational(), D), y(gen::rational(), gen::rational(), D),
            z(gen::rational(), gen::rational(), D);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * x.conjugate()).radical_part(), Rational{0});
        EXPECT_EQ(x.norm() * y.norm(), (x * y).norm());
        if (!x.norm().is_zero()) {
            EXPECT_EQ(x * x.inverse(), QuadExt::embed(Rational{1}, D));
        }
        EXPECT_EQ(x.pow(3), x * x * x);
    }
}

TEST(Poly, EvalAndText) {
    Poly p(std::vector<Rational>{Rational{1}, Rational{0}, Rational{6}});
    EXPECT_EQ(p.eval(Rational{1}), Rational{7});
    EXPECT_EQ(Poly{}.eval(Rational{5}), Rational{0});
    EXPECT_EQ(Poly::x().eval(Rational{5}), Rational{5});
    EXPECT_EQ(p.to_json_text(), R"(["1","0","6"])");
    EXPECT_EQ(Poly::parse_json_text(p.to_json_text()), p);
    EXPECT_EQ(p.to_pretty(), "6x^2 + 1");
    EXPECT_EQ(Poly{}.to_pretty(), "0");
    EXPECT_EQ(Poly{}.degree(), -1);
    EXPECT_THROW(Poly::parse_json_text("[1,2]"), ParseError);
    EXPECT_THROW(Poly::parse_json_text("{"), ParseError);
    EXPECT_EQ(Poly(std::vector<Rational>{Rational{1}, Rational{0}, Rational{0}}).degree(), 0);
}

TEST(PolyProperty, EvalIsARingHomomorphism) {
    for (int i = 0; i < 300; ++i) {
        Poly f = gen::poly(), g = gen::poly();
        Rational x0 = gen::rational(10);
        EXPECT_EQ((f + g).eval(x0), f.eval(x0) + g.eval(x0));
        EXPECT_EQ((f * g).eval(x0), f.eval(x0) * g.eval(x0));
        EXPECT_EQ((f - f), Poly{});
        if (!f.is_zero() && !g.is_zero()) {
            EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
        }
        EXPECT_EQ(Poly::parse_json_text(f.to_json_text()), f);
        EXPECT_EQ(poly_from_json(to_json(f)), f);
    }
}

TEST(Mat2, Helpers) {
    Mat2<Rational> m{Rational{2}, Rational{-1}, Rational{-1}, Rational{2}};
    Mat2<Rational> ones{Rational{1}, Rational{1}, Rational{1}, Rational{1}};
    EXPECT_EQ(mat_hadamard(m, ones), m);
    EXPECT_EQ(mat_hadamard(m, m), (Mat2<Rational>{Rational{4}, Rational{1}, Rational{1}, Rational{4}}));
    EXPECT_EQ(mat_adj(identity_like(m)), identity_like(m));
    EXPECT_EQ(mat_det(m), Rational{3});
    EXPECT_EQ(mat_pow(m, 0), identity_like(m));
    EXPECT_EQ(mat_pow(m, -2) * mat_pow(m, 2), identity_like(m));
    Mat2<Rational> singular{Rational{1}, Rational{2}, Rational{2}, Rational{4}};
    EXPECT_THROW(mat_pow(singular, -1), NotInvertible);
}

TEST(Mat2Property, PowersAndAdjugate) {
    for (int i = 0; i < 200; ++i) {
        Mat2<Rational> m{gen::rational(9), gen::rational(9), gen::rational(9), gen::rational(9)};
        EXPECT_EQ(m * mat_adj(m), mat_det(m) * identity_like(m));
        std::int64_t j = gen::int_in(0, 12), k = gen::int_in(0, 12);
        EXPECT_EQ(mat_pow(m, j) * mat_pow(m, k), mat_pow(m, j + k));
        EXPECT_EQ(mat_det(mat_pow(m, j)), mat_det(m).pow(j));
        EXPECT_EQ(rational_matrix_from_json(to_json(m)), m);
    }
}

TEST(Json, RejectsMalformedInput) {
    EXPECT_THROW(rational_from_json(Json(3)), ParseError);
    EXPECT_THROW(rational_from_json(Json("x")), ParseError);
    EXPECT_THROW(rational_matrix_from_json(Json::object()), ParseError);
    EXPECT_THROW(poly_from_json(Json("1")), ParseError);
}

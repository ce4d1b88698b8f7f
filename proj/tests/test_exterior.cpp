#include "lcs/form.hpp"
#include "lcs/form_text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lcs;

namespace {

std::mt19937_64 rng_for(const char* tag)
{
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937_64(seq);
}

Form random_homogeneous(std::mt19937_64& rng, const ExteriorBasis& basis, int k)
{
    std::uniform_int_distribution<long> num(-3, 3);
    Form f(basis.dim());
    for (std::size_t i = 0; i < basis.count(k); ++i)
        f.add_term(basis.mask_at(k, i), Rational(num(rng)));
    return f;
}

long binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("basis enumeration is lexicographic and complete")
{
    ExteriorBasis basis(5);
    for (int k = 0; k <= 5; ++k)
        CHECK(basis.count(k) == static_cast<std::size_t>(binom(5, k)));
    // Degree 2 in lex order: (0,1),(0,2),(0,3),(0,4),(1,2),...
    CHECK(basis.mask_at(2, 0) == 0b00011u);
    CHECK(basis.mask_at(2, 1) == 0b00101u);
    CHECK(basis.mask_at(2, 2) == 0b01001u);
    CHECK(basis.mask_at(2, 3) == 0b10001u);
    CHECK(basis.mask_at(2, 4) == 0b00110u);
    CHECK(basis.index_of(0b00110u) == 4);
}

TEST_CASE("wedge antisymmetry on generators")
{
    Form e1 = Form::generator(4, 0);
    Form e2 = Form::generator(4, 1);
    Form w12 = wedge(e1, e2);
    Form w21 = wedge(e2, e1);
    CHECK(w12.coeff(0b11u) == Rational(1));
    CHECK(w21.coeff(0b11u) == Rational(-1));
    CHECK(wedge(e1, e1).is_zero());
}

TEST_CASE("square of the standard symplectic form, n = 2")
{
    // (e1^e2 + e3^e4)^2 = 2 e1^e2^e3^e4
    Form omega = Form::monomial(4, 0b0011u, Rational(1)) + Form::monomial(4, 0b1100u, Rational(1));
    Form sq = wedge(omega, omega);
    CHECK(sq == Form::monomial(4, 0b1111u, Rational(2)));
}

TEST_CASE("wedge is associative and graded commutative on random forms")
{
    auto rng = rng_for("wedge-props");
    ExteriorBasis basis(6);
    for (int trial = 0; trial < 100; ++trial) {
        Form a = random_homogeneous(rng, basis, 1);
        Form b = random_homogeneous(rng, basis, 2);
        Form c = random_homogeneous(rng, basis, 1);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        // deg a * deg b = 2 even: commute; deg a * deg c = 1 odd: anticommute.
        CHECK(wedge(a, b) == wedge(b, a));
        CHECK(wedge(a, c) == Rational(-1) * wedge(c, a));
    }
}

TEST_CASE("grade projection partitions a mixed form")
{
    Form f = Form::unit(4) + Form::generator(4, 2)
             + Form::monomial(4, 0b0111u, Rational(5, 2));
    Form total(4);
    for (int k = 0; k <= 4; ++k)
        total = total + grade_project(f, k);
    CHECK(total == f);
    CHECK(grade_project(f, 3) == Form::monomial(4, 0b0111u, Rational(5, 2)));
    CHECK(grade_project(grade_project(f, 1), 1) == grade_project(f, 1));
    CHECK(grade_project(Form::monomial(4, 0b11u, Rational(1)), 3).is_zero());
}

TEST_CASE("interior product with a bivector")
{
    BiVector g(2);
    g.set(0, 1, Rational(-1));  // dual to e1^e2 under the standard pairing

    CHECK(interior_bivector(g, Form::generator(2, 0)).is_zero());
    CHECK(interior_bivector(g, Form::unit(2)).is_zero());

    // i(G)(e1^e2) with G = -X1^X2, convention i_{X1}i_{X2}: value +1.
    Form w = Form::monomial(2, 0b11u, Rational(1));
    CHECK(interior_bivector(g, w) == Form::unit(2));

    auto rng = rng_for("interior-linear");
    ExteriorBasis basis(4);
    BiVector g4(4);
    g4.set(0, 1, Rational(2));
    g4.set(2, 3, Rational(-1, 2));
    g4.set(0, 3, Rational(1));
    for (int trial = 0; trial < 50; ++trial) {
        Form f = random_homogeneous(rng, basis, 2);
        Form h = random_homogeneous(rng, basis, 2);
        CHECK(interior_bivector(g4, f + h)
              == interior_bivector(g4, f) + interior_bivector(g4, h));
    }
}

TEST_CASE("interior bivector matrix equals direct expansion on decomposables")
{
    ExteriorBasis basis(4);
    BiVector g(4);
    g.set(0, 1, Rational(1));
    g.set(1, 2, Rational(3, 2));
    g.set(0, 3, Rational(-2));
    for (int k = 2; k <= 4; ++k) {
        for (std::size_t j = 0; j < basis.count(k); ++j) {
            const std::uint32_t mask = basis.mask_at(k, j);
            Form e = Form::monomial(4, mask, Rational(1));
            // Direct expansion: sum over pairs (a < b) inside the tuple.
            Form expect(4);
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) {
                    if (!(mask & (1u << a)) || !(mask & (1u << b)))
                        continue;
                    Form dropped = interior_vector(a, interior_vector(b, e));
                    for (const auto& [m, c] : dropped.terms())
                        expect.add_term(m, g(a, b) * c);
                }
            CHECK(interior_bivector(g, e) == expect);
        }
    }
}

TEST_CASE("lambda_p pairing determinants")
{
    BiVector g(4);
    g.set(0, 1, Rational(-1));
    g.set(2, 3, Rational(-1));

    // p = 0: product of scalars.
    CHECK(lambda_p_pairing(g, 0, Form::monomial(4, 0, Rational(3)),
                           Form::monomial(4, 0, Rational(1, 3)))
          == Rational(1));
    // p = 1: the raw table.
    CHECK(lambda_p_pairing(g, 1, Form::generator(4, 0), Form::generator(4, 1))
          == Rational(-1));
    CHECK(lambda_p_pairing(g, 1, Form::generator(4, 1), Form::generator(4, 0))
          == Rational(1));
    // p = 2, omega against itself: det [[0,-1],[1,0]] per block, cross terms zero.
    Form omega = Form::monomial(4, 0b0011u, Rational(1)) + Form::monomial(4, 0b1100u, Rational(1));
    CHECK(lambda_p_pairing(g, 2, omega, omega) == Rational(2));

    CHECK_THROWS_AS(lambda_p_pairing(g, 2, Form::generator(4, 0), omega), DegreeMismatch);
}

TEST_CASE("form literals parse and print")
{
    std::vector<std::string> names{"a", "b", "g", "h"};
    Form f = parse_form(names, "3/2 a^b^g");
    CHECK(f == Form::monomial(4, 0b0111u, Rational(3, 2)));

    CHECK(parse_form(names, "1") == Form::unit(4));
    CHECK(parse_form(names, "a^b - g^h")
          == Form::monomial(4, 0b0011u, Rational(1))
                 + Form::monomial(4, 0b1100u, Rational(-1)));
    CHECK(parse_form(names, "b^a") == Form::monomial(4, 0b0011u, Rational(-1)));
    CHECK(parse_form(names, "-2 h") == Form::monomial(4, 0b1000u, Rational(-2)));
    CHECK(parse_form(names, "0").is_zero());
    CHECK_THROWS_AS(parse_form(names, "a^a"), ParseError);
    CHECK_THROWS_AS(parse_form(names, "q"), ParseError);

    auto rng = rng_for("literal-roundtrip");
    ExteriorBasis basis(4);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        Form h(4);
        std::uniform_int_distribution<long> num(-3, 3);
        for (int t = 0; t < 3; ++t) {
            int k = deg(rng);
            std::uniform_int_distribution<std::size_t> pick(0, basis.count(k) - 1);
            h.add_term(basis.mask_at(k, pick(rng)), Rational(num(rng), 2));
        }
        CHECK(parse_form(names, form_to_string(names, h)) == h);
    }
}

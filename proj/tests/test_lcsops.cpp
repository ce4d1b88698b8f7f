#include "lcs/lcs_structure.hpp"

#include "model_fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lcs;
using fixtures::lit;

namespace {

LcsStructure abelian_structure(int n)
{
    LieModel m = fixtures::abelian(n);
    Form omega(2 * n);
    for (int i = 0; i < n; ++i)
        omega.add_term((1u << (2 * i)) | (1u << (2 * i + 1)), Rational(1));
    return validate_lcs(m, omega, Form::zero(2 * n), "abelian");
}

LcsStructure heisenberg_structure(int n)
{
    LieModel m = fixtures::heisenberg(n);
    Differential d1 = lichnerowicz(m, lit(m, "a"), Rational(1));
    Form omega = d1.apply(lit(m, "z"));
    return validate_lcs(m, omega, lit(m, "a"), "heisenberg");
}

LcsStructure solv_structure(int sign)
{
    LieModel m = fixtures::solv(Rational(1), Rational(1));
    Form omega = (sign > 0) ? lit(m, "a^b + g^h") : lit(m, "a^b - g^h");
    Form theta = (sign > 0) ? lit(m, "g") : lit(m, "-1 g");
    return validate_lcs(m, omega, theta, sign > 0 ? "plus" : "minus");
}

LcsStructure kodaira_structure()
{
    LieModel m = fixtures::kodaira_thurston();
    return validate_lcs(m, lit(m, "e1^e4 + e2^e3"), Form::zero(4), "kt");
}

Matrix darboux_J_abelian(int n)
{
    Matrix J(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        J.at(2 * i + 1, 2 * i) = Rational(1);   // J X_{2i} = X_{2i+1}
        J.at(2 * i, 2 * i + 1) = Rational(-1);  // J X_{2i+1} = -X_{2i}
    }
    return J;
}

}  // namespace

TEST_CASE("validate_lcs accepts the catalog structures")
{
    CHECK_NOTHROW(abelian_structure(2));
    CHECK_NOTHROW(heisenberg_structure(1));
    CHECK_NOTHROW(heisenberg_structure(2));
    CHECK_NOTHROW(solv_structure(+1));
    CHECK_NOTHROW(solv_structure(-1));
    CHECK_NOTHROW(kodaira_structure());
}

TEST_CASE("validate_lcs rejects broken structures")
{
    LieModel m = fixtures::solv(Rational(1), Rational(1));
    // theta not closed
    CHECK_THROWS_AS(validate_lcs(m, lit(m, "a^b + g^h"), lit(m, "a")), ThetaNotClosed);
    // wrong Lee form
    CHECK_THROWS_AS(validate_lcs(m, lit(m, "a^b + g^h"), lit(m, "2 g")), NotLeeCompatible);
    // e1^e2 on the abelian model is closed but has rank 2 < 4
    LieModel ab = fixtures::abelian(2);
    CHECK_THROWS_AS(
        validate_lcs(ab, Form::monomial(4, 0b0011u, Rational(1)), Form::zero(4)),
        Degenerate);
    // odd-dimensional model
    LieModel odd = fixtures::make_model({"x", "y", "z"}, {});
    CHECK_THROWS_AS(validate_lcs(odd, Form::monomial(3, 0b011u, Rational(1)), Form::zero(3)),
                    OddDimension);
}

TEST_CASE("star operator: unit, omega, and the involution")
{
    LcsOps ops(abelian_structure(2));
    // *1 = omega^n / n!
    CHECK(ops.star_omega(Form::unit(4)) == ops.volume());
    // *omega = omega for the standard abelian structure, n = 2
    CHECK(ops.star_omega(ops.structure().omega) == ops.structure().omega);

    for (const auto& make : {abelian_structure(2), heisenberg_structure(1), solv_structure(+1),
                             solv_structure(-1), kodaira_structure()}) {
        LcsOps o(make);
        const int N = o.dim();
        for (int p = 0; p <= N; ++p) {
            Matrix sq = o.star(N - p) * o.star(p);
            CHECK(sq == Matrix::identity(o.basis().count(p)));
        }
    }
}

TEST_CASE("sl(2) relations hold exactly")
{
    for (const auto& make : {abelian_structure(1), abelian_structure(2),
                             heisenberg_structure(1), heisenberg_structure(2),
                             solv_structure(+1), solv_structure(-1), kodaira_structure()}) {
        LcsOps o(make);
        GradedMap a = o.A();
        CHECK(compose(o.Lstar(), o.L()) - compose(o.L(), o.Lstar()) == a);
        CHECK(compose(a, o.L()) - compose(o.L(), a) == Rational(-2) * o.L());
        CHECK(compose(a, o.Lstar()) - compose(o.Lstar(), a) == Rational(2) * o.Lstar());
    }
}

TEST_CASE("A annihilates middle degree and acts by n on scalars")
{
    LcsOps o(abelian_structure(2));
    GradedMap a = o.A();
    CHECK(a.at(2).is_zero());
    CHECK(a.at(0) == Rational(2) * Matrix::identity(1));
    // [L*, L] on degree 0 is multiplication by n.
    GradedMap comm = compose(o.Lstar(), o.L()) - compose(o.L(), o.Lstar());
    CHECK(comm.at(0) == Rational(2) * Matrix::identity(1));
}

TEST_CASE("L* agrees with the star conjugation in every degree")
{
    for (const auto& make : {abelian_structure(2), heisenberg_structure(1), solv_structure(+1),
                             solv_structure(-1), kodaira_structure()}) {
        LcsOps o(make);
        const int N = o.dim();
        for (int p = 2; p <= N; ++p) {
            Matrix conj = o.star(N - p + 2) * (o.L().at(N - p) * o.star(p));
            CHECK(conj == o.Lstar().at(p));
        }
    }
}

TEST_CASE("L*(g^a) = 0 on the solvmanifold: g^a is primitive")
{
    LcsOps o(solv_structure(+1));
    const LieModel& m = o.model();
    Form ga = lit(m, "g^a");
    CHECK(o.Lstar().apply(ga).is_zero());
    CHECK(o.L().apply(ga).is_zero());  // omega ^ g^a = 0 as well
}

TEST_CASE("commutation identities over k in [-3,3]")
{
    for (const auto& make :
         {abelian_structure(2), heisenberg_structure(1), solv_structure(+1),
          solv_structure(-1), kodaira_structure()}) {
        Report rep = commutation_checks(LcsOps(make), -3, 3);
        INFO(make.label);
        for (const auto& c : rep.checks) {
            INFO(c.label);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("abelian commutations reduce to dL = Ld = 0")
{
    LcsOps o(abelian_structure(2));
    GradedMap d0 = o.d_map(Rational(0));
    CHECK(d0.is_zero());
    CHECK(compose(d0, o.L()).is_zero());
}

TEST_CASE("metric layer on the flat abelian structure")
{
    LcsOps o(abelian_structure(2));
    MetricData md = metric_layer(o, darboux_J_abelian(2));
    CHECK(md.gram == Matrix::identity(4));
    // *_g^2 = (-1)^p
    for (int p = 0; p <= 4; ++p) {
        Matrix sq = md.star_g[4 - p] * md.star_g[p];
        Matrix expect = (p % 2 == 0 ? Rational(1) : Rational(-1))
                        * Matrix::identity(o.basis().count(p));
        CHECK(sq == expect);
    }
    // The two stars commute.
    for (int p = 0; p <= 4; ++p)
        CHECK(md.star_g[4 - p] * o.star(p) == o.star(4 - p) * md.star_g[p]);
}

TEST_CASE("metric layer rejects bad input")
{
    LcsOps o(abelian_structure(2));
    Matrix not_acs = Matrix::identity(4);
    CHECK_THROWS_AS(metric_layer(o, not_acs), NotAlmostComplex);

    // Compatible but indefinite: J X0 = X2 pairs each block with the other,
    // so g(X0, X0) = omega(X0, X2) = 0.
    Matrix j(4, 4);
    j.at(2, 0) = Rational(1);
    j.at(0, 2) = Rational(-1);
    j.at(3, 1) = Rational(1);
    j.at(1, 3) = Rational(-1);
    CHECK_THROWS_AS(metric_layer(o, j), NotPositive);

    // Incompatible: flipping one off-block sign breaks omega(J., J.) = omega.
    Matrix j2(4, 4);
    j2.at(2, 0) = Rational(1);
    j2.at(0, 2) = Rational(-1);
    j2.at(3, 1) = Rational(-1);
    j2.at(1, 3) = Rational(1);
    CHECK_THROWS_AS(metric_layer(o, j2), NotCompatible);
}

TEST_CASE("metric layer on the solvmanifold structures")
{
    for (int sign : {+1, -1}) {
        LcsOps o(solv_structure(sign));
        // omega = a^b +- g^h; J X = Y, J Z = +-T gives the diagonal metric.
        Matrix j(4, 4);
        j.at(1, 0) = Rational(1);
        j.at(0, 1) = Rational(-1);
        j.at(3, 2) = Rational(sign);
        j.at(2, 3) = Rational(-sign);
        MetricData md = metric_layer(o, j);
        CHECK(md.gram == Matrix::identity(4));
        for (int p = 0; p <= 4; ++p) {
            Matrix sq = md.star_g[4 - p] * md.star_g[p];
            Matrix expect = (p % 2 == 0 ? Rational(1) : Rational(-1))
                            * Matrix::identity(o.basis().count(p));
            CHECK(sq == expect);
            CHECK(md.star_g[4 - p] * o.star(p) == o.star(4 - p) * md.star_g[p]);
        }
    }
}

TEST_CASE("formal adjoint of d_l equals -*_g d_{-l} *_g")
{
    for (int sign : {+1, -1}) {
        LcsOps o(solv_structure(sign));
        Matrix j(4, 4);
        j.at(1, 0) = Rational(1);
        j.at(0, 1) = Rational(-1);
        j.at(3, 2) = Rational(sign);
        j.at(2, 3) = Rational(-sign);
        MetricData md = metric_layer(o, j);
        const int N = o.dim();
        for (long l : {-1L, 0L, 1L, 2L}) {
            GradedMap dl = o.d_map(Rational(l));
            GradedMap dml = o.d_map(Rational(-l));
            for (int p = 1; p <= N; ++p) {
                Matrix adj = formal_adjoint(md, dl.at(p - 1), p - 1, p);
                Matrix conj =
                    Rational(-1) * (md.star_g[N - p + 1] * (dml.at(N - p) * md.star_g[p]));
                CHECK(adj == conj);
            }
        }
    }
}

TEST_CASE("matrix of a composition equals the product of matrices")
{
    LcsOps o(solv_structure(+1));
    GradedMap d1 = o.d_map(Rational(1));
    GradedMap comp = compose(o.L(), d1);
    for (int q = 0; q + 3 <= o.dim(); ++q)
        CHECK(comp.at(q) == o.L().at(q + 1) * d1.at(q));
    // Applying the composed map agrees with composing applications.
    Form f = lit(o.model(), "a + 2 h");
    CHECK(comp.apply(f) == o.L().apply(d1.apply(f)));
}

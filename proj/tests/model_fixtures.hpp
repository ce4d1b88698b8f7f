#pragma once

// Hand-rolled model constructions for tests, independent of the library's
// catalog so the two can cross-check each other.

#include "lcs/form_text.hpp"
#include "lcs/lie_model.hpp"

#include <string>
#include <vector>

namespace fixtures {

struct Bracket {
    int i, j, m;
    lcs::Rational c;
};

inline lcs::LieModel make_model(std::vector<std::string> names,
                                const std::vector<Bracket>& brackets)
{
    const int n = static_cast<int>(names.size());
    std::vector<std::vector<std::vector<lcs::Rational>>> c(
        n, std::vector<std::vector<lcs::Rational>>(n, std::vector<lcs::Rational>(n)));
    for (const auto& b : brackets) {
        c[b.i][b.j][b.m] = b.c;
        c[b.j][b.i][b.m] = -b.c;
    }
    return lcs::LieModel(std::move(names), std::move(c));
}

/// Abelian model of dimension 2n with generators e1..e2n.
inline lcs::LieModel abelian(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= 2 * n; ++i)
        names.push_back("e" + std::to_string(i));
    return make_model(std::move(names), {});
}

/// h(n) + R: [X_i, Y_i] = Z. Generators x1,y1,...,xn,yn,z,a.
inline lcs::LieModel heisenberg(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        names.push_back("y" + std::to_string(i));
    }
    names.push_back("z");
    names.push_back("a");
    std::vector<Bracket> brackets;
    const int z = 2 * n;
    for (int i = 0; i < n; ++i)
        brackets.push_back({2 * i, 2 * i + 1, z, lcs::Rational(1)});
    return make_model(std::move(names), brackets);
}

/// Solvable 4-dimensional model with parameters (k, nl):
/// [X,Z] = k X, [Y,Z] = -k Y, [X,Y] = -nl T. Dual structure equations:
/// da = -k a^g, db = k b^g, dg = 0, dh = nl a^b.
inline lcs::LieModel solv(const lcs::Rational& k, const lcs::Rational& nl)
{
    return make_model({"a", "b", "g", "h"},
                      {{0, 2, 0, k}, {1, 2, 1, -k}, {0, 1, 3, -nl}});
}

/// Nilpotent 4-dimensional model: [X1, X2] = X3 (de3 = -e1^e2).
inline lcs::LieModel kodaira_thurston()
{
    return make_model({"e1", "e2", "e3", "e4"}, {{0, 1, 2, lcs::Rational(1)}});
}

inline lcs::Form lit(const lcs::LieModel& model, const std::string& text)
{
    return lcs::parse_form(model.names(), text);
}

}  // namespace fixtures

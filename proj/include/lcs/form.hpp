#pragma once

#include "lcs/errors.hpp"
#include "lcs/matrix.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace lcs {

/// Basis monomials of the exterior algebra over a based space of dimension
/// `dim`: strictly increasing index tuples, encoded as bitmasks and listed
/// in lexicographic order within each degree. This ordering fixes the
/// coordinates used by every matrix downstream.
class ExteriorBasis {
public:
    explicit ExteriorBasis(int dim) : dim_(dim), by_degree_(dim + 1)
    {
        if (dim < 0 || dim > 24)
            throw DimensionMismatch("ExteriorBasis: dimension out of range");
        std::vector<int> tuple;
        for (int k = 0; k <= dim; ++k)
            enumerate(k, 0, tuple);
        for (int k = 0; k <= dim; ++k)
            for (std::size_t i = 0; i < by_degree_[k].size(); ++i)
                index_[by_degree_[k][i]] = i;
    }

    int dim() const { return dim_; }
    std::size_t count(int k) const
    {
        return (k < 0 || k > dim_) ? 0 : by_degree_[k].size();
    }
    std::uint32_t mask_at(int k, std::size_t i) const { return by_degree_[k][i]; }
    std::size_t index_of(std::uint32_t mask) const { return index_.at(mask); }

private:
    void enumerate(int k, int start, std::vector<int>& tuple)
    {
        if (static_cast<int>(tuple.size()) == k) {
            std::uint32_t m = 0;
            for (int b : tuple)
                m |= (1u << b);
            by_degree_[k].push_back(m);
            return;
        }
        for (int i = start; i < dim_; ++i) {
            tuple.push_back(i);
            enumerate(k, i + 1, tuple);
            tuple.pop_back();
        }
    }

    int dim_;
    std::vector<std::vector<std::uint32_t>> by_degree_;
    std::unordered_map<std::uint32_t, std::size_t> index_;
};

inline int tuple_degree(std::uint32_t mask) { return std::popcount(mask); }

/// Koszul sign of e_A ^ e_B for disjoint masks: (-1)^{inversions}.
inline int wedge_sign(std::uint32_t a, std::uint32_t b)
{
    int inv = 0;
    for (std::uint32_t bb = b; bb; bb &= bb - 1) {
        const int bit = std::countr_zero(bb);
        inv += std::popcount(a >> (bit + 1));
    }
    return (inv % 2 == 0) ? 1 : -1;
}

/// Element of the exterior algebra: sparse map from strictly increasing
/// index tuples to nonzero coefficients.
class Form {
public:
    explicit Form(int dim = 0) : dim_(dim) {}

    static Form zero(int dim) { return Form(dim); }
    static Form unit(int dim) { return monomial(dim, 0, Rational(1)); }
    static Form generator(int dim, int i) { return monomial(dim, 1u << i, Rational(1)); }

    static Form monomial(int dim, std::uint32_t mask, const Rational& c)
    {
        Form f(dim);
        if (!c.is_zero())
            f.terms_[mask] = c;
        return f;
    }

    int dim() const { return dim_; }
    const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(std::uint32_t mask) const
    {
        auto it = terms_.find(mask);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        const int k = tuple_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (tuple_degree(m) != k)
                return false;
        return true;
    }

    /// Degree of a nonzero homogeneous form; throws otherwise.
    int degree() const
    {
        if (terms_.empty() || !is_homogeneous())
            throw NotHomogeneous("Form::degree: not a nonzero homogeneous form");
        return tuple_degree(terms_.begin()->first);
    }

    void add_term(std::uint32_t mask, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            terms_[mask] = c;
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    friend Form operator+(const Form& a, const Form& b)
    {
        if (a.dim_ != b.dim_)
            throw DimensionMismatch("Form sum: ambient dims differ");
        Form r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }

    friend Form operator-(const Form& a, const Form& b)
    {
        if (a.dim_ != b.dim_)
            throw DimensionMismatch("Form difference: ambient dims differ");
        Form r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }

    friend Form operator*(const Rational& c, const Form& f)
    {
        Form r(f.dim_);
        if (c.is_zero())
            return r;
        for (const auto& [m, v] : f.terms_)
            r.terms_[m] = c * v;
        return r;
    }

    friend bool operator==(const Form& a, const Form& b)
    {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    int dim_;
    std::map<std::uint32_t, Rational> terms_;
};

inline Form wedge(const Form& a, const Form& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("wedge: ambient dims differ");
    Form r(a.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb)
                continue;
            const int s = wedge_sign(ma, mb);
            r.add_term(ma | mb, (s == 1) ? ca * cb : -(ca * cb));
        }
    return r;
}

inline Form grade_project(const Form& f, int k)
{
    Form r(f.dim());
    for (const auto& [m, c] : f.terms())
        if (tuple_degree(m) == k)
            r.add_term(m, c);
    return r;
}

/// Interior product with a single basis vector X_j (degree -1, Koszul sign).
inline Form interior_vector(int j, const Form& f)
{
    Form r(f.dim());
    const std::uint32_t bit = 1u << j;
    for (const auto& [m, c] : f.terms()) {
        if (!(m & bit))
            continue;
        const int below = std::popcount(m & (bit - 1));
        r.add_term(m & ~bit, (below % 2 == 0) ? c : -c);
    }
    return r;
}

/// Antisymmetric coefficient table over index pairs; holds the bivector
/// dual to a nondegenerate 2-form and the inverse Gram of a metric.
class BiVector {
public:
    explicit BiVector(int dim) : dim_(dim), coeff_(dim, dim) {}

    static BiVector from_matrix(const Matrix& antisym)
    {
        BiVector g(static_cast<int>(antisym.rows()));
        for (std::size_t i = 0; i < antisym.rows(); ++i)
            for (std::size_t j = 0; j < antisym.cols(); ++j) {
                if (antisym.at(i, j) != -antisym.at(j, i))
                    throw MathError("BiVector: table is not antisymmetric");
                g.coeff_.at(i, j) = antisym.at(i, j);
            }
        return g;
    }

    int dim() const { return dim_; }
    const Rational& operator()(int i, int j) const { return coeff_.at(i, j); }

    void set(int i, int j, const Rational& v)
    {
        coeff_.at(i, j) = v;
        coeff_.at(j, i) = -v;
    }

    BiVector negated() const
    {
        BiVector g(dim_);
        g.coeff_ = Rational(-1) * coeff_;
        return g;
    }

private:
    int dim_;
    Matrix coeff_;
};

/// Contraction of a form with a bivector: sum over ordered pair removals
/// i_{X_k} i_{X_l} weighted by g(k,l), a degree -2 operator. The global sign
/// convention is anchored by the sl(2) commutation relations downstream.
inline Form interior_bivector(const BiVector& g, const Form& f)
{
    if (g.dim() != f.dim())
        throw DimensionMismatch("interior_bivector: ambient dims differ");
    Form r(f.dim());
    for (int k = 0; k < g.dim(); ++k)
        for (int l = k + 1; l < g.dim(); ++l) {
            const Rational& c = g(k, l);
            if (c.is_zero())
                continue;
            Form t = interior_vector(k, interior_vector(l, f));
            for (const auto& [m, v] : t.terms())
                r.add_term(m, c * v);
        }
    return r;
}

inline Rational determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant: matrix not square");
    const std::size_t n = m.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n)
            return Rational(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(piv, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        const Rational inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c).is_zero())
                continue;
            const Rational f = m.at(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

/// Pairing of two degree-p forms through a bivector: the p x p Gram
/// determinant on decomposables, extended bilinearly. p = 0 multiplies the
/// scalar parts.
inline Rational lambda_p_pairing(const BiVector& g, int p, const Form& a, const Form& b)
{
    if (g.dim() != a.dim() || g.dim() != b.dim())
        throw DimensionMismatch("lambda_p_pairing: ambient dims differ");
    auto homogeneous_of = [p](const Form& f) {
        return f.is_zero() || (f.is_homogeneous() && f.degree() == p);
    };
    if (!homogeneous_of(a) || !homogeneous_of(b))
        throw DegreeMismatch("lambda_p_pairing: inputs must be homogeneous of degree p");
    auto bits = [](std::uint32_t m) {
        std::vector<int> v;
        for (; m; m &= m - 1)
            v.push_back(std::countr_zero(m));
        return v;
    };
    Rational total;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const auto ia = bits(ma), ib = bits(mb);
            Matrix gram(p, p);
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c)
                    gram.at(r, c) = g(ia[r], ib[c]);
            total += ca * cb * determinant(gram);
        }
    return total;
}

inline Vec form_to_vec(const ExteriorBasis& basis, int k, const Form& f)
{
    Vec v(basis.count(k));
    for (const auto& [m, c] : f.terms()) {
        if (tuple_degree(m) != k)
            throw DegreeMismatch("form_to_vec: form has terms outside the requested degree");
        v[basis.index_of(m)] = c;
    }
    return v;
}

inline Form vec_to_form(const ExteriorBasis& basis, int k, const Vec& v)
{
    Form f(basis.dim());
    for (std::size_t i = 0; i < v.size(); ++i)
        f.add_term(basis.mask_at(k, i), v[i]);
    return f;
}

}  // namespace lcs

#pragma once

#include "lcs/errors.hpp"
#include "lcs/form.hpp"
#include "lcs/subspace.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcs {

/// Finite-dimensional Lie algebra model given by named generators and
/// structure constants [X_i, X_j] = sum_m c[i][j][m] X_m. The Jacobi
/// identity is validated at construction, together with d^2 = 0 for the
/// induced Chevalley-Eilenberg differential on degree 1.
///
/// Sign convention: d(e^m)(X_i, X_j) = -e^m([X_i, X_j]), i.e.
/// d e^m = -sum_{i<j} c[i][j][m] e^i ^ e^j.
class LieModel {
public:
    LieModel(std::vector<std::string> names,
             std::vector<std::vector<std::vector<Rational>>> structure)
        : names_(std::move(names)),
          c_(std::move(structure)),
          basis_(std::make_shared<ExteriorBasis>(static_cast<int>(names_.size())))
    {
        const int n = dim();
        if (static_cast<int>(c_.size()) != n)
            throw DimensionMismatch("LieModel: structure tensor has wrong shape");
        for (const auto& row : c_) {
            if (static_cast<int>(row.size()) != n)
                throw DimensionMismatch("LieModel: structure tensor has wrong shape");
            for (const auto& cell : row)
                if (static_cast<int>(cell.size()) != n)
                    throw DimensionMismatch("LieModel: structure tensor has wrong shape");
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m)
                    if (c_[i][j][m] != -c_[j][i][m])
                        throw MathError("LieModel: structure constants not antisymmetric");
        validate_jacobi();

        d_gen_.reserve(n);
        for (int m = 0; m < n; ++m) {
            Form dm(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    dm.add_term((1u << i) | (1u << j), -c_[i][j][m]);
            d_gen_.push_back(std::move(dm));
        }
        // Cross-check against Jacobi: d^2 = 0 on degree 1.
        for (int m = 0; m < n; ++m)
            if (!ce_d(d_gen_[m]).is_zero())
                throw InternalError("LieModel: d^2 != 0 on degree 1 despite Jacobi");
    }

    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const ExteriorBasis& basis() const { return *basis_; }
    std::shared_ptr<const ExteriorBasis> basis_ptr() const { return basis_; }
    const Rational& bracket(int i, int j, int m) const { return c_[i][j][m]; }

    /// Chevalley-Eilenberg differential extended as an odd derivation.
    Form ce_d(const Form& f) const
    {
        Form r(dim());
        for (const auto& [mask, coeff] : f.terms()) {
            int pos = 0;
            for (std::uint32_t m = mask; m; m &= m - 1, ++pos) {
                const int gen = std::countr_zero(m);
                // d(e_{i1}^...^e_{ik}) picks up (-1)^pos on the pos-th factor.
                const Rational sgn = (pos % 2 == 0) ? coeff : -coeff;
                const Form piece = wedge(d_gen_[gen], Form::monomial(dim(), mask & ~(1u << gen),
                                                                     Rational(1)));
                // Reattach the removed factor's position sign: e_I = e_gen ^ e_{I \ gen}
                // times the sign of moving e_gen to the front.
                for (const auto& [pm, pc] : piece.terms())
                    r.add_term(pm, sgn * pc);
            }
        }
        return r;
    }

private:
    void validate_jacobi() const
    {
        const int n = dim();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l)
                    for (int s = 0; s < n; ++s) {
                        Rational acc;
                        for (int m = 0; m < n; ++m) {
                            acc += c_[i][j][m] * c_[m][l][s];
                            acc += c_[j][l][m] * c_[m][i][s];
                            acc += c_[l][i][m] * c_[m][j][s];
                        }
                        if (!acc.is_zero())
                            throw JacobiFailure(i, j, l);
                    }
    }

    std::vector<std::string> names_;
    std::vector<std::vector<std::vector<Rational>>> c_;
    std::shared_ptr<ExteriorBasis> basis_;
    std::vector<Form> d_gen_;
};

/// A square-zero degree +1 operator on the exterior algebra of a model:
/// the Chevalley-Eilenberg differential deformed by k theta^ for a closed
/// 1-form theta. Holds one matrix per degree.
class Differential {
public:
    Differential(const LieModel& model, Form theta, Rational k,
                 std::vector<Matrix> per_degree)
        : dim_(model.dim()), theta_(std::move(theta)), k_(std::move(k)),
          mats_(std::move(per_degree)), basis_(model.basis_ptr())
    {
    }

    int dim() const { return dim_; }
    const Form& theta() const { return theta_; }
    const Rational& deformation() const { return k_; }

    /// Matrix of the operator on degree q (shape count(q+1) x count(q)).
    const Matrix& matrix(int q) const { return mats_.at(q); }

    Form apply(const Form& f) const
    {
        Form r(dim_);
        for (int q = 0; q <= dim_; ++q) {
            Form part = grade_project(f, q);
            if (part.is_zero())
                continue;
            if (q == dim_)
                continue;  // top degree maps to zero
            Vec v = form_to_vec(*basis_, q, part);
            Vec w = mats_[q].apply(v);
            r = r + vec_to_form(*basis_, q + 1, w);
        }
        return r;
    }

    const ExteriorBasis& basis() const { return *basis_; }

private:
    int dim_;
    Form theta_;
    Rational k_;
    std::vector<Matrix> mats_;  // mats_[q] : degree q -> q+1, q in [0, dim]
    std::shared_ptr<const ExteriorBasis> basis_;
};

/// Matrix of (f -> g ^ f) from degree q to degree q + deg g.
inline Matrix wedge_matrix(const ExteriorBasis& basis, const Form& g, int q, int target)
{
    Matrix m(basis.count(target), basis.count(q));
    for (std::size_t j = 0; j < basis.count(q); ++j) {
        Form e = Form::monomial(basis.dim(), basis.mask_at(q, j), Rational(1));
        Form w = wedge(g, e);
        m.set_col(j, form_to_vec(basis, target, w));
    }
    return m;
}

/// d_k = d + k theta^ ; requires d theta = 0. The result satisfies
/// d_k^2 = 0 (validated; a failure here means a broken internal invariant).
inline Differential lichnerowicz(const LieModel& model, const Form& theta, const Rational& k)
{
    if (!theta.is_zero() && (!theta.is_homogeneous() || theta.degree() != 1))
        throw DegreeMismatch("lichnerowicz: theta must be a 1-form");
    if (!model.ce_d(theta).is_zero())
        throw ThetaNotClosed("lichnerowicz: theta is not closed");
    const ExteriorBasis& basis = model.basis();
    const int n = model.dim();
    std::vector<Matrix> mats;
    mats.reserve(n + 1);
    for (int q = 0; q <= n; ++q) {
        Matrix d(basis.count(q + 1), basis.count(q));
        for (std::size_t j = 0; j < basis.count(q); ++j) {
            Form e = Form::monomial(n, basis.mask_at(q, j), Rational(1));
            Form v = model.ce_d(e);
            if (!k.is_zero())
                v = v + k * wedge(theta, e);
            d.set_col(j, form_to_vec(basis, q + 1, v));
        }
        mats.push_back(std::move(d));
    }
    for (int q = 0; q + 1 <= n; ++q)
        if (!(mats[q + 1] * mats[q]).is_zero())
            throw NotSquareZero("lichnerowicz: d_k^2 != 0");
    return Differential(model, theta, k, std::move(mats));
}

inline Differential ce_differential(const LieModel& model)
{
    return lichnerowicz(model, Form::zero(model.dim()), Rational(0));
}

struct CohomologyResult {
    std::vector<std::size_t> dims;         // per degree 0..dim
    std::vector<std::vector<Form>> reps;   // canonical representatives
    std::vector<Subspace> cocycles;        // ker d_k per degree
    std::vector<Subspace> boundaries;      // im d_k per degree
};

/// Cohomology of (Lambda g*, d_k), exact over Q. Representatives follow the
/// canonical pivot-complement rule.
inline CohomologyResult cohomology(const Differential& d)
{
    const ExteriorBasis& basis = d.basis();
    const int n = d.dim();
    CohomologyResult out;
    out.dims.resize(n + 1);
    out.reps.resize(n + 1);
    out.cocycles.reserve(n + 1);
    out.boundaries.reserve(n + 1);
    long euler_h = 0, euler_c = 0;
    for (int q = 0; q <= n; ++q) {
        Subspace z = (q == n) ? Subspace::full(basis.count(q)) : kernel(d.matrix(q));
        Subspace b = (q == 0) ? Subspace::zero(basis.count(0)) : Subspace::image(d.matrix(q - 1));
        QuotientSpace h(z, b);
        out.dims[q] = h.dim();
        for (std::size_t i = 0; i < h.dim(); ++i)
            out.reps[q].push_back(vec_to_form(basis, q, h.rep(i)));
        out.cocycles.push_back(std::move(z));
        out.boundaries.push_back(std::move(b));
        const long sign = (q % 2 == 0) ? 1 : -1;
        euler_h += sign * static_cast<long>(out.dims[q]);
        euler_c += sign * static_cast<long>(basis.count(q));
    }
    if (euler_h != euler_c)
        throw InternalError("cohomology: Euler characteristic mismatch");
    return out;
}

/// Returns rho with d rho = f when f is exact, degree by degree; otherwise
/// nullopt. NotExact is a result, not an error.
inline std::optional<Form> exactness_witness(const Differential& d, const Form& f)
{
    const ExteriorBasis& basis = d.basis();
    Form rho(d.dim());
    for (int q = 1; q <= d.dim(); ++q) {
        Form part = grade_project(f, q);
        if (part.is_zero())
            continue;
        auto x = solve(d.matrix(q - 1), form_to_vec(basis, q, part));
        if (!x)
            return std::nullopt;
        rho = rho + vec_to_form(basis, q - 1, *x);
    }
    if (!grade_project(f, 0).is_zero())
        return std::nullopt;  // nothing maps onto degree 0
    return rho;
}

}  // namespace lcs

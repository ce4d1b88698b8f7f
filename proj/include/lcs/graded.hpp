#pragma once

#include "lcs/form.hpp"
#include "lcs/lie_model.hpp"

#include <functional>
#include <vector>

namespace lcs {

/// Graded linear operator on the exterior algebra: one matrix per source
/// degree q in [0, dim], mapping degree q to degree q + shift. Degrees
/// outside [0, dim] are zero-dimensional, so out-of-range targets become
/// 0 x count(q) matrices and compositions stay shape-consistent.
class GradedMap {
public:
    GradedMap(const ExteriorBasis& basis, int shift)
        : basis_(&basis), shift_(shift), mats_(basis.dim() + 1)
    {
        for (int q = 0; q <= basis.dim(); ++q)
            mats_[q] = Matrix(basis.count(q + shift), basis.count(q));
    }

    /// Builds the operator from its action on basis monomials. The action
    /// must be homogeneous of the declared shift.
    static GradedMap from_action(const ExteriorBasis& basis, int shift,
                                 const std::function<Form(const Form&)>& act)
    {
        GradedMap g(basis, shift);
        for (int q = 0; q <= basis.dim(); ++q) {
            for (std::size_t j = 0; j < basis.count(q); ++j) {
                Form e = Form::monomial(basis.dim(), basis.mask_at(q, j), Rational(1));
                Form v = act(e);
                if (!v.is_zero() && grade_project(v, q + shift) != v)
                    throw InternalError("GradedMap::from_action: action is not homogeneous");
                if (static_cast<std::size_t>(0) < g.mats_[q].rows())
                    g.mats_[q].set_col(j, form_to_vec(basis, q + shift, v));
            }
        }
        return g;
    }

    int shift() const { return shift_; }
    int dim() const { return basis_->dim(); }
    const ExteriorBasis& basis() const { return *basis_; }

    const Matrix& at(int q) const { return mats_.at(q); }
    Matrix& at(int q) { return mats_.at(q); }

    Form apply(const Form& f) const
    {
        Form r(dim());
        for (int q = 0; q <= dim(); ++q) {
            Form part = grade_project(f, q);
            if (part.is_zero() || mats_[q].rows() == 0)
                continue;
            Vec w = mats_[q].apply(form_to_vec(*basis_, q, part));
            r = r + vec_to_form(*basis_, q + shift_, w);
        }
        return r;
    }

    friend GradedMap compose(const GradedMap& f, const GradedMap& g)
    {
        GradedMap r(*g.basis_, f.shift_ + g.shift_);
        for (int q = 0; q <= g.dim(); ++q) {
            const int mid = q + g.shift_;
            if (mid < 0 || mid > g.dim()) {
                // g lands in a zero space; r stays the zero map of right shape.
                continue;
            }
            Matrix prod = f.mats_[mid] * g.mats_[q];
            if (prod.rows() == r.mats_[q].rows())
                r.mats_[q] = std::move(prod);
        }
        return r;
    }

    friend GradedMap operator+(const GradedMap& a, const GradedMap& b)
    {
        if (a.shift_ != b.shift_)
            throw DimensionMismatch("GradedMap sum: shift mismatch");
        GradedMap r(*a.basis_, a.shift_);
        for (int q = 0; q <= a.dim(); ++q)
            r.mats_[q] = a.mats_[q] + b.mats_[q];
        return r;
    }

    friend GradedMap operator-(const GradedMap& a, const GradedMap& b)
    {
        if (a.shift_ != b.shift_)
            throw DimensionMismatch("GradedMap difference: shift mismatch");
        GradedMap r(*a.basis_, a.shift_);
        for (int q = 0; q <= a.dim(); ++q)
            r.mats_[q] = a.mats_[q] - b.mats_[q];
        return r;
    }

    friend GradedMap operator*(const Rational& c, const GradedMap& a)
    {
        GradedMap r(*a.basis_, a.shift_);
        for (int q = 0; q <= a.dim(); ++q)
            r.mats_[q] = c * a.mats_[q];
        return r;
    }

    friend bool operator==(const GradedMap& a, const GradedMap& b)
    {
        if (a.shift_ != b.shift_ || a.dim() != b.dim())
            return false;
        for (int q = 0; q <= a.dim(); ++q)
            if (!(a.mats_[q] == b.mats_[q]))
                return false;
        return true;
    }

    bool is_zero() const
    {
        for (const auto& m : mats_)
            if (!m.is_zero())
                return false;
        return true;
    }

private:
    const ExteriorBasis* basis_;
    int shift_;
    std::vector<Matrix> mats_;
};

inline GradedMap as_graded(const Differential& d)
{
    GradedMap g(d.basis(), +1);
    for (int q = 0; q <= d.dim(); ++q)
        g.at(q) = d.matrix(q);
    return g;
}

}  // namespace lcs

#pragma once

#include "lcs/matrix.hpp"

#include <cstddef>
#include <vector>

namespace lcs {

/// Linear subspace of Q^n held as a canonical RREF basis. Two subspaces are
/// equal iff their stored bases are identical matrices.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient)
    {
        return span(Matrix::identity(ambient));
    }

    /// Row space of the given matrix.
    static Subspace span(const Matrix& rows)
    {
        Subspace s(rows.cols());
        RrefResult r = rref(rows);
        Matrix b(r.rank, rows.cols());
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j)
                b.at(i, j) = r.rref.at(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = std::move(r.pivots);
        return s;
    }

    static Subspace span(const std::vector<Vec>& rows, std::size_t ambient)
    {
        return span(Matrix::from_rows(rows, ambient));
    }

    /// Column space of m (the image of x -> m x).
    static Subspace image(const Matrix& m) { return span(m.transpose()); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec basis_row(std::size_t i) const { return basis_.row(i); }

    /// Residue of v after reduction by the RREF basis rows; zero iff v lies
    /// in the subspace.
    Vec reduce(Vec v) const
    {
        if (v.size() != ambient_)
            throw DimensionMismatch("Subspace::reduce: ambient mismatch");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const Rational& c = v[pivots_[i]];
            if (c.is_zero())
                continue;
            const Rational f = c;
            for (std::size_t j = pivots_[i]; j < ambient_; ++j)
                v[j] -= f * basis_.at(i, j);
        }
        return v;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& other) const
    {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_row(i)))
                return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw DimensionMismatch("Subspace sum: ambient dims differ");
    Matrix stacked(a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i)
        stacked.set_row(i, a.basis_row(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        stacked.set_row(a.dim() + i, b.basis_row(i));
    return Subspace::span(stacked);
}

/// Intersection via the kernel of the concatenated coefficient system:
/// x = u A = v B exactly when (u, -v) kills [A^T | -B^T].
inline Subspace intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw DimensionMismatch("Subspace intersection: ambient dims differ");
    const std::size_t ra = a.dim(), rb = b.dim();
    if (ra == 0 || rb == 0)
        return Subspace::zero(a.ambient());
    Matrix sys(a.ambient(), ra + rb);
    for (std::size_t j = 0; j < ra; ++j)
        sys.set_col(j, a.basis_row(j));
    for (std::size_t j = 0; j < rb; ++j) {
        Vec col = vec_scale(Rational(-1), b.basis_row(j));
        sys.set_col(ra + j, col);
    }
    // Kernel of sys, then project onto the u block and map back through A.
    RrefResult r = rref(sys);
    std::vector<Vec> gens;
    std::vector<bool> is_pivot(ra + rb, false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    for (std::size_t free = 0; free < ra + rb; ++free) {
        if (is_pivot[free])
            continue;
        Vec u(ra);
        if (free < ra)
            u[free] = Rational(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.pivots[i] < ra)
                u[r.pivots[i]] = -r.rref.at(i, free);
        Vec x(a.ambient());
        for (std::size_t j = 0; j < ra; ++j)
            if (!u[j].is_zero())
                x = vec_add(x, vec_scale(u[j], a.basis_row(j)));
        if (!vec_is_zero(x))
            gens.push_back(std::move(x));
    }
    return Subspace::span(gens, a.ambient());
}

/// Null space {x : m x = 0}.
inline Subspace kernel(const Matrix& m)
{
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec x(m.cols());
        x[free] = Rational(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            x[r.pivots[i]] = -r.rref.at(i, free);
        gens.push_back(std::move(x));
    }
    return Subspace::span(gens, m.cols());
}

/// {x in source : m x in target}.
inline Subspace preimage(const Matrix& m, const Subspace& source, const Subspace& target)
{
    if (m.cols() != source.ambient() || m.rows() != target.ambient())
        throw DimensionMismatch("preimage: shape mismatch");
    if (source.dim() == 0)
        return Subspace::zero(source.ambient());
    // Condition on coordinates c over source's basis: reduce(m * (c . basis)) = 0.
    Matrix cond(target.ambient(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j)
        cond.set_col(j, target.reduce(m.apply(source.basis_row(j))));
    Subspace coef = kernel(cond);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < coef.dim(); ++i) {
        Vec c = coef.basis_row(i);
        Vec x(source.ambient());
        for (std::size_t j = 0; j < source.dim(); ++j)
            if (!c[j].is_zero())
                x = vec_add(x, vec_scale(c[j], source.basis_row(j)));
        gens.push_back(std::move(x));
    }
    return Subspace::span(gens, source.ambient());
}

/// Image of a subspace under a linear map.
inline Subspace map_image(const Matrix& m, const Subspace& s)
{
    std::vector<Vec> rows;
    rows.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        rows.push_back(m.apply(s.basis_row(i)));
    return Subspace::span(rows, m.rows());
}

/// Quotient sub/mod with canonical representatives: the rows of sub's RREF
/// basis that survive a greedy completion of mod, taken in pivot order.
class QuotientSpace {
public:
    QuotientSpace(Subspace sub, Subspace mod) : sub_(std::move(sub)), mod_(std::move(mod))
    {
        if (sub_.ambient() != mod_.ambient())
            throw DimensionMismatch("QuotientSpace: ambient dims differ");
        if (!sub_.contains(mod_))
            throw NotWellDefined("QuotientSpace: modulus is not contained in the subspace");
        Subspace seen = mod_;
        for (std::size_t i = 0; i < sub_.dim(); ++i) {
            Vec v = sub_.basis_row(i);
            if (seen.contains(v))
                continue;
            reps_.push_back(v);
            seen = sum(seen, Subspace::span({v}, sub_.ambient()));
        }
        if (reps_.size() != sub_.dim() - mod_.dim())
            throw InternalError("QuotientSpace: representative count mismatch");
        // Solve matrix [reps^T | mod basis^T] for coords().
        solve_ = Matrix(sub_.ambient(), reps_.size() + mod_.dim());
        for (std::size_t j = 0; j < reps_.size(); ++j)
            solve_.set_col(j, reps_[j]);
        for (std::size_t j = 0; j < mod_.dim(); ++j)
            solve_.set_col(reps_.size() + j, mod_.basis_row(j));
    }

    std::size_t dim() const { return reps_.size(); }
    std::size_t ambient() const { return sub_.ambient(); }
    const Subspace& sub() const { return sub_; }
    const Subspace& mod() const { return mod_; }
    const Vec& rep(std::size_t i) const { return reps_[i]; }

    /// Coordinates of [v] over the canonical representatives; v must lie in sub.
    Vec coords(const Vec& v) const
    {
        auto x = solve(solve_, v);
        if (!x)
            throw NotWellDefined("QuotientSpace::coords: vector not in the subspace");
        Vec c(reps_.size());
        for (std::size_t i = 0; i < reps_.size(); ++i)
            c[i] = (*x)[i];
        return c;
    }

    /// Ambient vector of a coordinate tuple.
    Vec lift(const Vec& c) const
    {
        Vec v(sub_.ambient());
        for (std::size_t i = 0; i < reps_.size(); ++i)
            if (!c[i].is_zero())
                v = vec_add(v, vec_scale(c[i], reps_[i]));
        return v;
    }

private:
    Subspace sub_, mod_;
    std::vector<Vec> reps_;
    Matrix solve_;
};

/// Matrix of f restricted to a source and target subspace, in their RREF
/// basis coordinates. Throws when f does not map src into tgt.
inline Matrix restrict_map(const Matrix& f, const Subspace& src, const Subspace& tgt)
{
    Matrix solver(tgt.ambient(), tgt.dim());
    for (std::size_t c = 0; c < tgt.dim(); ++c)
        solver.set_col(c, tgt.basis_row(c));
    Matrix out(tgt.dim(), src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j) {
        auto x = solve(solver, f.apply(src.basis_row(j)));
        if (!x)
            throw NotWellDefined("restrict_map: image leaves the target subspace");
        out.set_col(j, *x);
    }
    return out;
}

/// Gram matrix of a bilinear form restricted to a subspace basis.
inline Matrix restrict_bilinear(const Matrix& gram, const Subspace& s)
{
    Matrix b = s.basis();
    return b * (gram * b.transpose());
}

/// Matrix of the map (dom.sub/dom.mod) -> (cod.sub/cod.mod) induced by f.
/// Validates that f maps dom.sub into cod.sub and dom.mod into cod.mod; a
/// failure signals a mathematical error upstream.
inline Matrix induced_quotient_map(const Matrix& f, const QuotientSpace& dom,
                                   const QuotientSpace& cod)
{
    for (std::size_t i = 0; i < dom.sub().dim(); ++i)
        if (!cod.sub().contains(f.apply(dom.sub().basis_row(i))))
            throw NotWellDefined("induced map does not send subspace into subspace");
    for (std::size_t i = 0; i < dom.mod().dim(); ++i)
        if (!cod.mod().contains(f.apply(dom.mod().basis_row(i))))
            throw NotWellDefined("induced map does not send modulus into modulus");
    Matrix m(cod.dim(), dom.dim());
    for (std::size_t j = 0; j < dom.dim(); ++j)
        m.set_col(j, cod.coords(f.apply(dom.rep(j))));
    return m;
}

/// ker g / im f defect for a composable pair with g∘f = 0; zero exactly when
/// the pair is exact at the middle term.
inline std::size_t exactness_defect(std::size_t rank_incoming, std::size_t dim_kernel_outgoing)
{
    if (dim_kernel_outgoing < rank_incoming)
        throw InternalError("exactness_defect: image not contained in kernel");
    return dim_kernel_outgoing - rank_incoming;
}

}  // namespace lcs

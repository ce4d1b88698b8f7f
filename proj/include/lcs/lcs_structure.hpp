#pragma once

#include "lcs/graded.hpp"
#include "lcs/lie_model.hpp"
#include "lcs/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcs {

/// A locally conformal symplectic structure on a Lie model: omega
/// nondegenerate, theta closed, and d omega = -omega ^ theta exactly.
/// theta is the Lee form itself; the deformation d_k everywhere below means
/// d + k theta^.
struct LcsStructure {
    LieModel model;
    Form omega;
    Form theta;
    int n = 0;  // half-dimension
    std::string label;
};

inline LcsStructure validate_lcs(const LieModel& model, const Form& omega, const Form& theta,
                                 std::string label = "")
{
    if (model.dim() % 2 != 0)
        throw OddDimension("validate_lcs: model dimension is odd");
    const int n = model.dim() / 2;
    if (omega.is_zero() || !omega.is_homogeneous() || omega.degree() != 2)
        throw DegreeMismatch("validate_lcs: omega must be a nonzero 2-form");
    if (!theta.is_zero() && (!theta.is_homogeneous() || theta.degree() != 1))
        throw DegreeMismatch("validate_lcs: theta must be a 1-form");
    if (!model.ce_d(theta).is_zero())
        throw ThetaNotClosed("validate_lcs: theta is not closed");
    if (!(model.ce_d(omega) + wedge(omega, theta)).is_zero())
        throw NotLeeCompatible("validate_lcs: d omega != -omega ^ theta");
    Form power = Form::unit(model.dim());
    for (int i = 0; i < n; ++i)
        power = wedge(power, omega);
    if (power.is_zero())
        throw Degenerate("validate_lcs: omega^n = 0");
    return LcsStructure{model, omega, theta, n, std::move(label)};
}

/// The operator suite attached to a validated structure: L = omega^,
/// the bivector G_omega, the star operator, L* = i(G_omega), the grading
/// operator A = sum (n-q) pi_q, and the adjoint differentials (d_k)*.
///
/// The sign of G_omega is selected so that [L*, L] = A holds; the star
/// conjugation identity L* = *_omega L *_omega then follows and is checked
/// by the test suite.
class LcsOps {
public:
    explicit LcsOps(LcsStructure s)
        : s_(std::move(s)), basis_(&s_.model.basis()), G_(s_.model.dim())
    {
        const int dim = s_.model.dim();
        L_ = std::make_unique<GradedMap>(GradedMap::from_action(
            *basis_, +2, [this](const Form& f) { return wedge(s_.omega, f); }));

        // Coefficient table W[i][j] = omega(X_i, X_j).
        Matrix w(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                Rational c = s_.omega.coeff((1u << i) | (1u << j));
                w.at(i, j) = c;
                w.at(j, i) = -c;
            }
        Matrix winv = inverse(w);

        bool found = false;
        for (int attempt = 0; attempt < 2 && !found; ++attempt) {
            BiVector cand = BiVector::from_matrix(attempt == 0 ? winv
                                                               : Rational(-1) * winv);
            GradedMap lstar = GradedMap::from_action(
                *basis_, -2, [&cand](const Form& f) { return interior_bivector(cand, f); });
            if (sl2_holds(lstar)) {
                G_ = cand;
                Lstar_ = std::make_unique<GradedMap>(std::move(lstar));
                found = true;
            }
        }
        if (!found)
            throw InternalError("LcsOps: no sign of G_omega satisfies the sl(2) relations");

        stars_ = build_stars();
    }

    LcsOps(const LcsOps&) = delete;
    LcsOps& operator=(const LcsOps&) = delete;

    const LcsStructure& structure() const { return s_; }
    const LieModel& model() const { return s_.model; }
    const ExteriorBasis& basis() const { return *basis_; }
    int n() const { return s_.n; }
    int dim() const { return s_.model.dim(); }

    const GradedMap& L() const { return *L_; }
    const GradedMap& Lstar() const { return *Lstar_; }
    const BiVector& G() const { return G_; }

    /// A = sum_q (n - q) pi_q.
    GradedMap A() const
    {
        GradedMap a(*basis_, 0);
        for (int q = 0; q <= dim(); ++q)
            a.at(q) = Rational(n() - q) * Matrix::identity(basis_->count(q));
        return a;
    }

    /// *_omega per degree; an involution.
    const Matrix& star(int p) const { return stars_.at(p); }

    Form star_omega(const Form& f) const
    {
        if (f.is_zero())
            return f;
        if (!f.is_homogeneous())
            throw NotHomogeneous("star_omega: input must be homogeneous");
        const int p = f.degree();
        Vec v = stars_[p].apply(form_to_vec(*basis_, p, f));
        return vec_to_form(*basis_, dim() - p, v);
    }

    Differential d(const Rational& k) const { return lichnerowicz(s_.model, s_.theta, k); }

    GradedMap d_map(const Rational& k) const { return as_graded(d(k)); }

    /// (d_k)* = (-1)^p *_omega d_{n+k-p} *_omega on degree p, a degree -1
    /// operator.
    GradedMap d_star(const Rational& k) const
    {
        const int N = dim();
        GradedMap out(*basis_, -1);
        for (int p = 1; p <= N; ++p) {
            Differential dd = d(Rational(n()) + k - Rational(p));
            Matrix m = stars_[N - p + 1] * (dd.matrix(N - p) * stars_[p]);
            out.at(p) = (p % 2 == 0) ? std::move(m) : Rational(-1) * m;
        }
        return out;
    }

    /// L^p as a graded map.
    GradedMap L_power(int p) const
    {
        GradedMap r = identity_map();
        for (int i = 0; i < p; ++i)
            r = compose(*L_, r);
        return r;
    }

    GradedMap identity_map() const
    {
        GradedMap id(*basis_, 0);
        for (int q = 0; q <= dim(); ++q)
            id.at(q) = Matrix::identity(basis_->count(q));
        return id;
    }

    /// omega^n / n! (the volume form used by both star operators).
    Form volume() const
    {
        Form v = Form::unit(dim());
        Rational fact(1);
        for (int i = 1; i <= n(); ++i) {
            v = wedge(v, s_.omega);
            fact *= Rational(i);
        }
        return fact.inverse() * v;
    }

private:
    bool sl2_holds(const GradedMap& lstar) const
    {
        // [L*, L] = A, [A, L] = -2L, [A, L*] = 2L*.
        GradedMap a = A_of(lstar);
        if (!(compose(lstar, *L_) - compose(*L_, lstar) == a))
            return false;
        if (!(compose(a, *L_) - compose(*L_, a) == Rational(-2) * *L_))
            return false;
        if (!(compose(a, lstar) - compose(lstar, a) == Rational(2) * lstar))
            return false;
        return true;
    }

    GradedMap A_of(const GradedMap&) const
    {
        GradedMap a(*basis_, 0);
        for (int q = 0; q <= dim(); ++q)
            a.at(q) = Rational(n() - q) * Matrix::identity(basis_->count(q));
        return a;
    }

    /// Solves beta ^ *alpha = Lambda^p G(beta, alpha) omega^n/n! columnwise.
    std::vector<Matrix> build_stars() const
    {
        const int N = dim();
        Form vol = volume();
        const Rational v = vol.coeff((1u << N) - 1);
        if (v.is_zero())
            throw InternalError("LcsOps: volume form has no top coefficient");
        std::vector<Matrix> stars;
        stars.reserve(N + 1);
        for (int p = 0; p <= N; ++p) {
            Matrix st(basis_->count(N - p), basis_->count(p));
            for (std::size_t j = 0; j < basis_->count(p); ++j) {
                const Form alpha = Form::monomial(N, basis_->mask_at(p, j), Rational(1));
                for (std::size_t i = 0; i < basis_->count(p); ++i) {
                    const std::uint32_t mi = basis_->mask_at(p, i);
                    const std::uint32_t comp = ((1u << N) - 1) & ~mi;
                    const Form beta = Form::monomial(N, mi, Rational(1));
                    const Rational pairing = lambda_p_pairing(G_, p, beta, alpha);
                    const int sgn = wedge_sign(mi, comp);
                    const Rational coeff = (sgn == 1) ? pairing * v : -(pairing * v);
                    st.at(basis_->index_of(comp), j) = coeff;
                }
            }
            stars.push_back(std::move(st));
        }
        return stars;
    }

    LcsStructure s_;
    const ExteriorBasis* basis_;
    BiVector G_;
    std::unique_ptr<GradedMap> L_;
    std::unique_ptr<GradedMap> Lstar_;
    std::vector<Matrix> stars_;
};

/// Exact verification of the commutation identities d_theta L = L d,
/// d_k L^p = L^p d_{k-p}, and L* (d_k)* = (d_{k-1})* L* over a range of
/// deformation indices. Failures are report entries.
inline Report commutation_checks(const LcsOps& ops, long k_min, long k_max)
{
    Report rep("commutation checks");
    const GradedMap d0 = ops.d_map(Rational(0));
    const GradedMap d1 = ops.d_map(Rational(1));
    rep.add("d_theta L = L d",
            compose(d1, ops.L()) == compose(ops.L(), d0));
    for (long k = k_min; k <= k_max; ++k) {
        GradedMap dk = ops.d_map(Rational(k));
        for (int p = 0; p <= ops.n(); ++p) {
            GradedMap lp = ops.L_power(p);
            GradedMap dkp = ops.d_map(Rational(k) - Rational(p));
            rep.add("d_" + std::to_string(k) + " L^" + std::to_string(p) + " = L^"
                        + std::to_string(p) + " d_" + std::to_string(k - p),
                    compose(dk, lp) == compose(lp, dkp));
        }
        GradedMap dks = ops.d_star(Rational(k));
        GradedMap dkm1s = ops.d_star(Rational(k - 1));
        rep.add("L* (d_" + std::to_string(k) + ")* = (d_" + std::to_string(k - 1) + ")* L*",
                compose(ops.Lstar(), dks) == compose(dkm1s, ops.Lstar()));
    }
    return rep;
}

/// Optional compatible-metric layer: J with J^2 = -Id and omega(J., J.) =
/// omega(., .), the metric g = omega(., J.), the Hodge star, formal
/// adjoints, and the conjugation operator *_g *_omega.
struct MetricData {
    Matrix J;                    // on vectors
    Matrix gram;                 // g(X_i, X_j)
    std::vector<Matrix> star_g;  // per degree
    std::vector<Matrix> inner;   // Gram of the induced inner product on each degree
    std::vector<Matrix> jcal;    // *_g *_omega per degree
};

inline MetricData metric_layer(const LcsOps& ops, const Matrix& J)
{
    const int N = ops.dim();
    const ExteriorBasis& basis = ops.basis();
    if (J.rows() != static_cast<std::size_t>(N) || J.cols() != static_cast<std::size_t>(N))
        throw DimensionMismatch("metric_layer: J has wrong shape");
    Matrix minus_id = Rational(-1) * Matrix::identity(N);
    if (!(J * J == minus_id))
        throw NotAlmostComplex("metric_layer: J^2 != -Id");

    Matrix w(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i < j)
                w.at(i, j) = ops.structure().omega.coeff((1u << i) | (1u << j));
            else if (i > j)
                w.at(i, j) = -ops.structure().omega.coeff((1u << j) | (1u << i));
        }
    if (!(J.transpose() * (w * J) == w))
        throw NotCompatible("metric_layer: omega(J., J.) != omega");

    Matrix gram = w * J;  // g(X_i, X_j) = omega(X_i, J X_j)
    if (!(gram == gram.transpose()))
        throw NotCompatible("metric_layer: induced g is not symmetric");
    // Positive definiteness via leading principal minors.
    for (int k = 1; k <= N; ++k) {
        Matrix lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                lead.at(i, j) = gram.at(i, j);
        if (determinant(lead).sign() <= 0)
            throw NotPositive("metric_layer: g is not positive definite");
    }

    MetricData md;
    md.J = J;
    md.gram = gram;
    // G_g = gram^{-1} is symmetric; the Gram-determinant pairing below only
    // reads table entries, so no antisymmetry wrapper applies.
    Matrix ginv = inverse(gram);
    Form vol = ops.volume();
    const Rational v = vol.coeff((1u << N) - 1);
    md.star_g.reserve(N + 1);
    md.inner.reserve(N + 1);
    auto pair_p = [&](int p, std::uint32_t ma, std::uint32_t mb) {
        auto bits = [](std::uint32_t m) {
            std::vector<int> out;
            for (; m; m &= m - 1)
                out.push_back(std::countr_zero(m));
            return out;
        };
        const auto ia = bits(ma), ib = bits(mb);
        Matrix g2(p, p);
        for (int r = 0; r < p; ++r)
            for (int c = 0; c < p; ++c)
                g2.at(r, c) = ginv.at(ia[r], ib[c]);
        return determinant(g2);
    };
    for (int p = 0; p <= N; ++p) {
        Matrix st(basis.count(N - p), basis.count(p));
        Matrix ip(basis.count(p), basis.count(p));
        for (std::size_t j = 0; j < basis.count(p); ++j) {
            const std::uint32_t mj = basis.mask_at(p, j);
            for (std::size_t i = 0; i < basis.count(p); ++i) {
                const std::uint32_t mi = basis.mask_at(p, i);
                const Rational pairing = pair_p(p, mi, mj);
                ip.at(i, j) = pairing;
                const std::uint32_t comp = ((1u << N) - 1) & ~mi;
                const int sgn = wedge_sign(mi, comp);
                st.at(basis.index_of(comp), j) = (sgn == 1) ? pairing * v : -(pairing * v);
            }
        }
        md.star_g.push_back(std::move(st));
        md.inner.push_back(std::move(ip));
    }
    md.jcal.reserve(N + 1);
    for (int p = 0; p <= N; ++p)
        md.jcal.push_back(md.star_g[N - p] * ops.star(p));
    return md;
}

/// Formal adjoint of a degree-homogeneous map with respect to the g-induced
/// inner products: adj = inner_src^{-1} f^T inner_tgt.
inline Matrix formal_adjoint(const MetricData& md, const Matrix& f, int src_degree,
                             int tgt_degree)
{
    return inverse(md.inner[src_degree]) * (f.transpose() * md.inner[tgt_degree]);
}

}  // namespace lcs

#include "avb/ellipsoid.hpp"

#include <cmath>
#include <stdexcept>

namespace avb::convex {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Symmetric-matrix coordinate basis E_1..E_{n(n+1)/2}.
std::vector<MatrixXd> sym_basis(int n) {
    std::vector<MatrixXd> b;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            MatrixXd e = MatrixXd::Zero(n, n);
            e(i, j) = e(j, i) = 1.0;
            b.push_back(e);
        }
    return b;
}

bool is_pd(const MatrixXd& w) {
    Eigen::LLT<MatrixXd> llt(w);
    return llt.info() == Eigen::Success;
}

// Maximizes log det W over positive-definite W subject to u_iᵀ W u_i ≤ b_i,
// by damped Newton on the log-det barrier along the central path.
// Both ellipsoid problems reduce to this form:
//   inscribed in an H-polytope: u = facet normal, b = offset², J = {xᵀW⁻¹x ≤ 1};
//   enclosing a V-polytope:     u = vertex,       b = 1,       L = {xᵀWx ≤ 1}.
struct BarrierResult {
    MatrixXd W;
    double gap = 0.0;
    bool converged = false;
};

BarrierResult max_logdet_quadratic(const std::vector<VectorXd>& u,
                                   const std::vector<double>& b, double tol,
                                   const MatrixXd* warm_start = nullptr) {
    const int n = int(u.front().size());
    const int m = int(u.size());
    const auto basis = sym_basis(n);
    const int nv = int(basis.size());

    // Strictly feasible start: a small round ball (or the warm start, shrunk
    // slightly if it sits on a constraint).
    MatrixXd w;
    if (warm_start) {
        w = *warm_start;
        double worst = 0;
        for (int i = 0; i < m; ++i) worst = std::max(worst, u[i].dot(w * u[i]) / b[i]);
        if (worst >= 1.0) w *= 0.99 / worst;
    } else {
        double r2 = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) r2 = std::min(r2, b[i] / u[i].squaredNorm());
        w = 0.9 * r2 * MatrixXd::Identity(n, n);
    }

    const int iter_cap = 500;
    int iters = 0;
    double t = 1.0;
    while (true) {
        // Newton iterations at fixed barrier weight t.
        for (;;) {
            if (++iters > iter_cap) return {w, m / t, false};
            MatrixXd winv = w.inverse();
            std::vector<double> s(m);
            for (int i = 0; i < m; ++i) {
                s[i] = b[i] - u[i].dot(w * u[i]);
                if (s[i] <= 0) s[i] = 1e-300;  // numerical safety; step control below
            }
            VectorXd grad(nv);
            MatrixXd hess(nv, nv);
            std::vector<MatrixXd> we(nv);
            for (int k = 0; k < nv; ++k) we[k] = winv * basis[k] * winv;
            std::vector<std::vector<double>> ueu(m, std::vector<double>(nv));
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < nv; ++k) ueu[i][k] = u[i].dot(basis[k] * u[i]);
            for (int k = 0; k < nv; ++k) {
                double g = t * (winv.cwiseProduct(basis[k])).sum();
                for (int i = 0; i < m; ++i) g -= ueu[i][k] / s[i];
                grad(k) = g;
                for (int l = k; l < nv; ++l) {
                    double h = -t * (we[k].cwiseProduct(basis[l])).sum();
                    for (int i = 0; i < m; ++i) h -= ueu[i][k] * ueu[i][l] / (s[i] * s[i]);
                    hess(k, l) = hess(l, k) = h;
                }
            }
            VectorXd d = (-hess).ldlt().solve(grad);
            double decrement = grad.dot(d);
            if (decrement < 2.0 * tol * tol || decrement < 1e-18) break;
            MatrixXd dw = MatrixXd::Zero(n, n);
            for (int k = 0; k < nv; ++k) dw += d(k) * basis[k];
            // Backtrack to stay strictly feasible.
            double alpha = 1.0;
            for (int bt = 0; bt < 60; ++bt, alpha *= 0.5) {
                MatrixXd wn = w + alpha * dw;
                if (!is_pd(wn)) continue;
                bool ok = true;
                for (int i = 0; i < m; ++i)
                    if (u[i].dot(wn * u[i]) >= b[i]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    w = wn;
                    break;
                }
            }
            if (alpha < 1e-17) break;
        }
        if (m / t <= tol) return {w, m / t, true};
        t *= 10.0;
    }
}

EllipsoidResult ball(std::size_t n, double radius) {
    EllipsoidResult r;
    r.Q = MatrixXd::Identity(int(n), int(n)) / (radius * radius);
    r.log_volume = std::log(unit_ball_volume(n)) + double(n) * std::log(radius);
    r.certificate_gap = 0.0;
    return r;
}

EllipsoidResult from_shape(const MatrixXd& q, double gap) {
    EllipsoidResult r;
    r.Q = (q + q.transpose()) / 2.0;
    r.log_volume = std::log(unit_ball_volume(std::size_t(q.rows()))) -
                   0.5 * std::log(r.Q.determinant());
    r.certificate_gap = gap;
    return r;
}

std::vector<VectorXd> to_eigen(const std::vector<RatVec>& vs) {
    std::vector<VectorXd> out;
    for (const auto& v : vs) {
        VectorXd x(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) x(int(i)) = to_double(v[i]);
        out.push_back(std::move(x));
    }
    return out;
}

// One pass of barycentric coordinate ascent on the enclosing-ellipsoid weights;
// cheap warm start before the Newton polish.
MatrixXd khachiyan_warm_start(const std::vector<VectorXd>& v, int max_iters) {
    const int n = int(v.front().size());
    const int m = int(v.size());
    VectorXd uw = VectorXd::Constant(m, 1.0 / m);
    MatrixXd mm;
    for (int it = 0; it < max_iters; ++it) {
        mm = MatrixXd::Zero(n, n);
        for (int i = 0; i < m; ++i) mm += uw(i) * v[i] * v[i].transpose();
        MatrixXd minv = mm.inverse();
        int jstar = 0;
        double kappa = 0;
        for (int i = 0; i < m; ++i) {
            double wi = v[i].dot(minv * v[i]);
            if (wi > kappa) {
                kappa = wi;
                jstar = i;
            }
        }
        if (kappa <= n * (1.0 + 1e-4)) break;
        double beta = (kappa - n) / (n * (kappa - 1.0));
        uw *= (1.0 - beta);
        uw(jstar) += beta;
    }
    mm = MatrixXd::Zero(n, n);
    for (int i = 0; i < m; ++i) mm += uw(i) * v[i] * v[i].transpose();
    // Scale so every vertex satisfies vᵀMv ≤ 1.
    MatrixXd minv = mm.inverse();
    double kappa = 0;
    for (int i = 0; i < m; ++i) kappa = std::max(kappa, v[i].dot(minv * v[i]));
    return minv / kappa;  // feasible shape for the logdet program
}

double lp_john_radius(std::size_t n, double p) {
    // Inscribed ball: radius 1 for p ≥ 2, n^{1/2-1/p} for p ≤ 2.
    if (p >= 2.0) return 1.0;
    return std::pow(double(n), 0.5 - 1.0 / p);
}

double lp_lowner_radius(std::size_t n, double p) {
    if (p == inf_p) return std::sqrt(double(n));
    if (p <= 2.0) return 1.0;
    return std::pow(double(n), 0.5 - 1.0 / p);
}

}  // namespace

EllipsoidResult john_ellipsoid(const ConvexBody& c, double tol) {
    switch (c.kind) {
        case RepKind::Ellipsoid: {
            MatrixXd q(int(c.n), int(c.n));
            for (std::size_t i = 0; i < c.n; ++i)
                for (std::size_t j = 0; j < c.n; ++j) q(int(i), int(j)) = to_double(c.Q(i, j));
            return from_shape(q, 0.0);
        }
        case RepKind::LpBall:
            return ball(c.n, lp_john_radius(c.n, c.p));
        case RepKind::HPoly:
        case RepKind::VPoly: {
            auto fs = facet_rep(c);
            std::vector<VectorXd> u;
            std::vector<double> b;
            for (const auto& f : fs) {
                VectorXd a(int(c.n));
                for (std::size_t i = 0; i < c.n; ++i) a(int(i)) = to_double(f.normal[i]);
                double off = to_double(f.offset);
                u.push_back(a);
                b.push_back(off * off);
            }
            auto res = max_logdet_quadratic(u, b, tol);
            if (!res.converged)
                throw std::runtime_error("john_ellipsoid: barrier solver hit iteration cap");
            // A posteriori inclusion check at every constraint.
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i].dot(res.W * u[i]) > b[i] * (1.0 + 10 * tol))
                    throw std::runtime_error("john_ellipsoid: inclusion violated");
            return from_shape(res.W.inverse(), res.gap);
        }
    }
    throw std::logic_error("unreachable");
}

EllipsoidResult lowner_ellipsoid(const ConvexBody& c, double tol) {
    switch (c.kind) {
        case RepKind::Ellipsoid:
            return john_ellipsoid(c, tol);
        case RepKind::LpBall:
            return ball(c.n, lp_lowner_radius(c.n, c.p));
        case RepKind::HPoly:
        case RepKind::VPoly: {
            auto vs = to_eigen(vertex_rep(c));
            std::vector<double> b(vs.size(), 1.0);
            MatrixXd warm = khachiyan_warm_start(vs, 300);
            auto res = max_logdet_quadratic(vs, b, tol, &warm);
            if (!res.converged)
                throw std::runtime_error("lowner_ellipsoid: barrier solver hit iteration cap");
            for (const auto& v : vs)
                if (v.dot(res.W * v) > 1.0 + 10 * tol)
                    throw std::runtime_error("lowner_ellipsoid: containment violated");
            return from_shape(res.W, res.gap);
        }
    }
    throw std::logic_error("unreachable");
}

double volume_ratio(const ConvexBody& c) {
    double lv = std::log(volume(c));
    return std::exp((lv - john_ellipsoid(c).log_volume) / double(c.n));
}

double vr_tilde(const ConvexBody& c) {
    double lv = std::log(volume(c));
    return std::exp((lowner_ellipsoid(c).log_volume - lv) / double(c.n));
}

std::pair<double, double> bm_distance_bound(const ConvexBody& c) {
    if (c.kind == RepKind::Ellipsoid) return {1.0, 1.0};
    const double root_n = std::sqrt(double(c.n));
    ConvexBody cpol = polar(c);
    // Only the volume-ratio product vr(C)·vr(C°) is a sound lower bound for the
    // Banach–Mazur distance to the euclidean ball.  The analogous product of
    // enclosing-ellipsoid ratios exceeds the distance on the square
    // (π/2 > √2), so it is not part of the certified bracket.
    double lower = std::max(volume_ratio(c) * volume_ratio(cpol), 1.0);

    double upper = root_n;
    if (c.kind == RepKind::LpBall) {
        double scale = lp_lowner_radius(c.n, c.p) / lp_john_radius(c.n, c.p);
        upper = std::min(upper, scale);
    } else {
        auto j = john_ellipsoid(c);
        auto l = lowner_ellipsoid(c);
        // Smallest a with C ⊆ a·J(C): J-gauge maximum over vertices.
        double a = 0;
        for (const auto& v : to_eigen(vertex_rep(c)))
            a = std::max(a, std::sqrt(v.dot(j.Q * v)));
        // Smallest b with (1/b)·L(C) ⊆ C: support of L against each facet.
        Eigen::MatrixXd linv = l.Q.inverse();
        double b = 0;
        for (const auto& f : facet_rep(c)) {
            Eigen::VectorXd an(int(c.n));
            for (std::size_t i = 0; i < c.n; ++i) an(int(i)) = to_double(f.normal[i]);
            b = std::max(b, std::sqrt(an.dot(linv * an)) / to_double(f.offset));
        }
        upper = std::min({upper, a, b});
    }
    upper = std::max(upper, lower);  // numerical guard: the bracket must nest
    return {lower, upper};
}

}  // namespace avb::convex

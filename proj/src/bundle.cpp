#include "avb/bundle.hpp"

#include "avb/lattice.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace avb::bundles {

using convex::ConvexBody;
using convex::RepKind;

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

Eigen::MatrixXd to_eigen(const RatMat& m) {
    Eigen::MatrixXd e(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) e(int(i), int(j)) = to_double(m(i, j));
    return e;
}

RatMat from_eigen(const Eigen::MatrixXd& e) {
    RatMat m(std::size_t(e.rows()), std::size_t(e.cols()));
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) m(i, j) = Rat(e(i, j));  // doubles are exact rationals
    return m;
}

}  // namespace

AdelicBundle AdelicBundle::with_gram(RatMat a, RatMat g) {
    require(a.rows == a.cols && a.rows >= 1, "lattice matrix must be square");
    require(det(a) != 0, "lattice matrix must be invertible");
    require(g.rows == a.rows && is_positive_definite(g), "Gram must be positive definite");
    AdelicBundle b;
    b.n = a.rows;
    b.finite.A = std::move(a);
    b.arch.kind = MetricKind::Hermitian;
    b.arch.G = std::move(g);
    return b;
}

AdelicBundle AdelicBundle::with_body(RatMat a, ConvexBody c) {
    require(a.rows == a.cols && a.rows >= 1, "lattice matrix must be square");
    require(det(a) != 0, "lattice matrix must be invertible");
    require(c.n == a.rows, "body dimension must match rank");
    AdelicBundle b;
    b.n = a.rows;
    b.finite.A = std::move(a);
    b.arch.kind = MetricKind::Body;
    b.arch.body = std::move(c);
    return b;
}

AdelicBundle AdelicBundle::standard(std::size_t n) {
    return with_gram(RatMat::identity(n), RatMat::identity(n));
}

Rat finite_norm(const AdelicBundle& b, const RatVec& x, std::uint64_t p) {
    bool zero = true;
    for (const auto& xi : x)
        if (xi != 0) zero = false;
    if (zero) throw std::domain_error("finite_norm of the zero vector");
    RatVec c = mat_vec(inverse(b.finite.A), x);
    Rat m = 0;
    auto v = places::Place::finite(p);
    for (const auto& ci : c)
        if (ci != 0) m = std::max(m, places::abs_value_exact(ci, v));
    return m;
}

double degree(const AdelicBundle& b) {
    double finite_part = -std::log(std::abs(to_double(det(b.finite.A))));
    if (b.hermitian()) return finite_part - 0.5 * std::log(to_double(det(b.arch.G)));
    return finite_part +
           std::log(convex::volume(*b.arch.body) / convex::unit_ball_volume(b.n));
}

double degree_normalized(const AdelicBundle& b) { return degree(b); }  // D = 1 over Q

LpDegree degree_lp_formula(std::size_t n, double p, int r1, int r2) {
    const double pi = std::acos(-1.0);
    double lg_1p = p == convex::inf_p ? 0.0 : std::lgamma(1.0 + 1.0 / p);
    double lg_np = p == convex::inf_p ? 0.0 : std::lgamma(1.0 + double(n) / p);
    double lg_2p = p == convex::inf_p ? 0.0 : std::lgamma(1.0 + 2.0 / p);
    double lg_2np = p == convex::inf_p ? 0.0 : std::lgamma(1.0 + 2.0 * double(n) / p);
    double log_nfact = std::lgamma(double(n) + 1.0);
    LpDegree d;
    d.printed = r1 * (double(n) * lg_1p + std::lgamma(1.0 + double(n) / 2.0) - lg_np -
                      (double(n) / 2.0) * std::log(pi)) +
                r2 * (double(n) * lg_2p + log_nfact - lg_2np);
    double per_real =
        std::log(convex::lp_ball_volume(n, p) / convex::unit_ball_volume(n));
    double per_complex = std::log(convex::lp_ball_volume_complex(n, p) /
                                  convex::lp_ball_volume_complex(n, 2.0));
    d.definitional = r1 * per_real + r2 * per_complex;
    return d;
}

double euler_characteristic(const AdelicBundle& b) {
    // Covolume of Q in its adeles is 1, so only the reference-ball term remains.
    return degree(b) + std::log(convex::unit_ball_volume(b.n));
}

AdelicBundle dual(const AdelicBundle& b) {
    RatMat a_dual = transpose(inverse(b.finite.A));
    if (b.hermitian()) return AdelicBundle::with_gram(std::move(a_dual), inverse(b.arch.G));
    return AdelicBundle::with_body(std::move(a_dual), convex::polar(*b.arch.body));
}

AdelicBundle direct_sum_p(const AdelicBundle& b1, const AdelicBundle& b2, double p) {
    require(p >= 1.0, "direct sum needs p in [1, inf]");
    RatMat a = block_diag(b1.finite.A, b2.finite.A);
    if (p == 2.0 && b1.hermitian() && b2.hermitian())
        return AdelicBundle::with_gram(std::move(a), block_diag(b1.arch.G, b2.arch.G));
    auto polytope_able = [](const AdelicBundle& b) {
        return !b.hermitian() && (b.arch.body->kind == RepKind::HPoly ||
                                  b.arch.body->kind == RepKind::VPoly);
    };
    if (!b1.hermitian() && !b2.hermitian() && b1.arch.body->kind == RepKind::LpBall &&
        b2.arch.body->kind == RepKind::LpBall && b1.arch.body->p == p &&
        b2.arch.body->p == p)
        return AdelicBundle::with_body(std::move(a),
                                       ConvexBody::lp_ball(b1.n + b2.n, p));
    if (polytope_able(b1) && polytope_able(b2) && (p == 1.0 || p == convex::inf_p)) {
        std::vector<RatVec> vs;
        if (p == convex::inf_p) {
            for (const auto& u : vertex_rep(*b1.arch.body))
                for (const auto& w : vertex_rep(*b2.arch.body)) {
                    RatVec v = u;
                    v.insert(v.end(), w.begin(), w.end());
                    vs.push_back(std::move(v));
                }
        } else {
            for (const auto& u : vertex_rep(*b1.arch.body)) {
                RatVec v = u;
                v.resize(b1.n + b2.n, Rat(0));
                vs.push_back(std::move(v));
            }
            for (const auto& w : vertex_rep(*b2.arch.body)) {
                RatVec v(b1.n, Rat(0));
                v.insert(v.end(), w.begin(), w.end());
                vs.push_back(std::move(v));
            }
        }
        return AdelicBundle::with_body(std::move(a),
                                       ConvexBody::vpoly(b1.n + b2.n, std::move(vs)));
    }
    throw std::invalid_argument(
        "direct_sum_p: this metric combination has no representable sum body; "
        "use the hermitian p=2 sum or polytope bodies with p in {1, inf}");
}

AdelicBundle tensor_g2(const AdelicBundle& b1, const AdelicBundle& b2) {
    require(b1.hermitian() && b2.hermitian(),
            "tensor_g2 needs hermitian metrics; bracket body metrics with their "
            "John/Loewner bundles first");
    return AdelicBundle::with_gram(kron(b1.finite.A, b2.finite.A),
                                   kron(b1.arch.G, b2.arch.G));
}

AdelicBundle exterior(const AdelicBundle& b, std::size_t r) {
    require(b.hermitian(), "exterior power needs a hermitian metric");
    require(r >= 1 && r <= b.n, "exterior power out of range");
    return AdelicBundle::with_gram(compound(b.finite.A, r), compound(b.arch.G, r));
}

// --- symmetric powers ------------------------------------------------------

namespace {

// Degree-ell exponent vectors in n variables, lexicographically decreasing:
// (ell,0,..), (ell-1,1,0,..), ...
void gen_exponents(std::size_t n, std::size_t ell, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(int(ell));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = int(ell); e >= 0; --e) {
        cur.push_back(e);
        gen_exponents(n, ell - std::size_t(e), cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> exponents(std::size_t n, std::size_t ell) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_exponents(n, ell, cur, out);
    return out;
}

Rat permanent(const RatMat& m) {
    const std::size_t k = m.rows;
    if (k == 0) return 1;
    std::vector<bool> used(k, false);
    auto rec = [&](auto&& self, std::size_t row) -> Rat {
        if (row == k) return Rat(1);
        Rat s = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (used[j] || m(row, j) == 0) continue;
            used[j] = true;
            s += m(row, j) * self(self, row + 1);
            used[j] = false;
        }
        return s;
    };
    return rec(rec, 0);
}

std::vector<std::size_t> multiset_of(const std::vector<int>& expo) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < expo.size(); ++k)
        for (int t = 0; t < expo[k]; ++t) out.push_back(k);
    return out;
}

}  // namespace

AdelicBundle symmetric(const AdelicBundle& b, std::size_t ell) {
    require(b.hermitian(), "symmetric power needs a hermitian metric");
    require(ell >= 1, "symmetric power needs ell >= 1");
    const std::size_t n = b.n;
    auto expos = exponents(n, ell);
    const std::size_t nn = expos.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < nn; ++i) index[expos[i]] = i;

    // Matrix of the symmetric power of A in the monomial basis: column i is
    // the expansion of ∏_k (A·e)_k^{i_k}.
    RatMat a_sym(nn, nn);
    for (std::size_t col = 0; col < nn; ++col) {
        std::map<std::vector<int>, Rat> poly;
        poly[std::vector<int>(n, 0)] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            for (int t = 0; t < expos[col][k]; ++t) {
                std::map<std::vector<int>, Rat> next;
                for (const auto& [e, coef] : poly)
                    for (std::size_t j = 0; j < n; ++j) {
                        if (b.finite.A(j, k) == 0) continue;
                        auto e2 = e;
                        ++e2[j];
                        next[e2] += coef * b.finite.A(j, k);
                    }
                poly = std::move(next);
            }
        }
        for (const auto& [e, coef] : poly) a_sym(index.at(e), col) = coef;
    }

    // Induced Gram: ⟨m_i, m_j⟩ = perm(G[multiset(i), multiset(j)]) / ell!.
    Rat ell_fact(factorial(ell));
    RatMat g_sym(nn, nn);
    for (std::size_t i = 0; i < nn; ++i) {
        auto mi = multiset_of(expos[i]);
        for (std::size_t j = i; j < nn; ++j) {
            auto mj = multiset_of(expos[j]);
            RatMat sub(ell, ell);
            for (std::size_t s = 0; s < ell; ++s)
                for (std::size_t t = 0; t < ell; ++t) sub(s, t) = b.arch.G(mi[s], mj[t]);
            g_sym(i, j) = g_sym(j, i) = permanent(sub) / ell_fact;
        }
    }
    return AdelicBundle::with_gram(std::move(a_sym), std::move(g_sym));
}

// --- sub and quotient bundles ----------------------------------------------

std::vector<RatVec> sub_lattice_basis(const AdelicBundle& b, const std::vector<RatVec>& s) {
    require(!s.empty() && s.size() <= b.n, "sub: bad subspace basis size");
    RatMat ainv = inverse(b.finite.A);
    std::vector<IntVec> gens;
    for (const auto& v : s) {
        RatVec z = mat_vec(ainv, v);
        Int lcm = 1;
        for (const auto& zi : z) {
            Int d = denominator(zi);
            lcm = lcm / gcd(lcm, d) * d;
        }
        IntVec g(b.n);
        for (std::size_t i = 0; i < b.n; ++i) g[i] = numerator(Rat(z[i] * lcm));
        gens.push_back(std::move(g));
    }
    auto sat = saturate(gens, b.n);
    require(sat.size() == s.size(), "sub: basis vectors must be independent");
    std::vector<RatVec> w;
    for (const auto& col : sat) {
        RatVec z(b.n);
        for (std::size_t i = 0; i < b.n; ++i) z[i] = Rat(col[i]);
        w.push_back(mat_vec(b.finite.A, z));
    }
    return w;
}

AdelicBundle sub(const AdelicBundle& b, const std::vector<RatVec>& s) {
    auto wcols = sub_lattice_basis(b, s);
    const std::size_t r = wcols.size();
    RatMat w(b.n, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < b.n; ++i) w(i, j) = wcols[j][i];

    if (b.hermitian())
        return AdelicBundle::with_gram(RatMat::identity(r),
                                       mat_mul(transpose(w), mat_mul(b.arch.G, w)));

    const ConvexBody& c = *b.arch.body;
    switch (c.kind) {
        case RepKind::Ellipsoid:
            return AdelicBundle::with_body(
                RatMat::identity(r),
                ConvexBody::ellipsoid(mat_mul(transpose(w), mat_mul(c.Q, w))));
        case RepKind::LpBall:
            if (c.p == 2.0)
                return AdelicBundle::with_body(
                    RatMat::identity(r),
                    ConvexBody::ellipsoid(mat_mul(transpose(w), w)));
            throw std::invalid_argument("sub: lp-ball restriction is not representable");
        case RepKind::HPoly:
        case RepKind::VPoly: {
            std::vector<convex::Facet> fs;
            for (const auto& f : facet_rep(c))
                fs.push_back({mat_vec(transpose(w), f.normal), f.offset});
            return AdelicBundle::with_body(RatMat::identity(r),
                                           ConvexBody::hpoly(r, std::move(fs)));
        }
    }
    throw std::logic_error("unreachable");
}

AdelicBundle quotient(const AdelicBundle& b, const std::vector<RatVec>& s) {
    require(b.hermitian(), "quotient metrics are computed for hermitian bundles");
    require(s.size() < b.n, "quotient by the full space is empty");
    // E/V is dual to the annihilator of V inside the dual bundle.
    RatMat st(s.size(), b.n);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < b.n; ++j) st(i, j) = s[i][j];
    auto ann = kernel(std::move(st));
    require(ann.size() == b.n - s.size(), "quotient: basis vectors must be independent");
    return dual(sub(dual(b), ann));
}

AdelicBundle scale(const AdelicBundle& b, const Rat& r, const Rat& t) {
    require(r != 0 && t > 0, "scale needs r != 0, t > 0");
    RatMat a = b.finite.A;
    for (auto& x : a.a) x *= r;
    if (b.hermitian()) {
        RatMat g = b.arch.G;
        for (auto& x : g.a) x *= t * t;
        return AdelicBundle::with_gram(std::move(a), std::move(g));
    }
    const ConvexBody& c = *b.arch.body;
    switch (c.kind) {
        case RepKind::Ellipsoid: {
            RatMat q = c.Q;
            for (auto& x : q.a) x *= t * t;
            return AdelicBundle::with_body(std::move(a), ConvexBody::ellipsoid(std::move(q)));
        }
        case RepKind::HPoly: {
            auto fs = c.facets;
            for (auto& f : fs) f.offset /= t;
            return AdelicBundle::with_body(std::move(a),
                                           ConvexBody::hpoly(c.n, std::move(fs)));
        }
        case RepKind::VPoly: {
            auto vs = c.vertices;
            for (auto& v : vs)
                for (auto& x : v) x /= t;
            return AdelicBundle::with_body(std::move(a),
                                           ConvexBody::vpoly(c.n, std::move(vs)));
        }
        case RepKind::LpBall:
            if (t == 1) return AdelicBundle::with_body(std::move(a), c);
            if (c.p == 2.0) {
                RatMat q = RatMat::identity(c.n);
                for (auto& x : q.a) x *= t * t;
                return AdelicBundle::with_body(std::move(a),
                                               ConvexBody::ellipsoid(std::move(q)));
            }
            throw std::invalid_argument("scale: scaled lp ball is not representable");
    }
    throw std::logic_error("unreachable");
}

AdelicBundle john_bundle(const AdelicBundle& b, double tol) {
    if (b.hermitian()) return b;
    auto e = convex::john_ellipsoid(*b.arch.body, tol);
    return AdelicBundle::with_gram(b.finite.A, from_eigen(e.Q));
}

AdelicBundle lowner_bundle(const AdelicBundle& b, double tol) {
    if (b.hermitian()) return b;
    auto e = convex::lowner_ellipsoid(*b.arch.body, tol);
    return AdelicBundle::with_gram(b.finite.A, from_eigen(e.Q));
}

// --- heights ---------------------------------------------------------------

namespace {

// ∏_p max_i |c_i|_p over all primes, exactly: p^{-min_i v_p(c_i)} per prime.
Rat finite_norm_product(const std::vector<Rat>& entries) {
    std::vector<Rat> nonzero;
    for (const auto& e : entries)
        if (e != 0) nonzero.push_back(e);
    if (nonzero.empty()) throw std::domain_error("zero input to a finite norm");
    std::set<std::uint64_t> primes;
    for (const auto& e : nonzero)
        for (auto p : places::prime_support(e)) primes.insert(p);
    Rat prod = 1;
    for (auto p : primes) {
        long vmin = places::valuation(nonzero[0], p);
        for (const auto& e : nonzero) vmin = std::min(vmin, places::valuation(e, p));
        Rat pw = 1;
        for (long i = 0; i < std::abs(vmin); ++i)
            vmin >= 0 ? pw /= Rat(Int(p)) : pw *= Rat(Int(p));
        prod *= pw;
    }
    return prod;
}

}  // namespace

HeightValue height_vector(const AdelicBundle& b, const RatVec& x) {
    bool zero = true;
    for (const auto& xi : x)
        if (xi != 0) zero = false;
    if (zero) throw std::domain_error("height of the zero vector");
    HeightValue h;
    h.finite_part = finite_norm_product(mat_vec(inverse(b.finite.A), x));
    if (b.hermitian()) {
        RatVec xr = x;
        h.arch_part = 0.5 * std::log(to_double(quad_form(b.arch.G, xr, xr)));
    } else {
        std::vector<double> xd(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) xd[i] = to_double(x[i]);
        h.arch_part = std::log(convex::gauge(*b.arch.body, xd));
    }
    h.value = std::log(to_double(h.finite_part)) + h.arch_part;
    return h;
}

MapHeight height_map(const AdelicBundle& b1, const AdelicBundle& b2, const RatMat& m) {
    require(m.rows == b2.n && m.cols == b1.n, "height_map: dimension mismatch");
    RatMat local = mat_mul(inverse(b2.finite.A), mat_mul(m, b1.finite.A));
    Rat finite_prod = finite_norm_product(local.a);

    // Archimedean operator norm: exact for hermitian pairs as a largest
    // singular value; otherwise a certified upper bound via the ellipsoid
    // sandwich J(C₂) ⊆ C₂ and C₁ ⊆ L(C₁).
    auto source_outer = [&](const AdelicBundle& b) {
        if (b.hermitian()) return to_eigen(b.arch.G);
        return convex::lowner_ellipsoid(*b.arch.body).Q;
    };
    auto target_inner = [&](const AdelicBundle& b) {
        if (b.hermitian()) return to_eigen(b.arch.G);
        return convex::john_ellipsoid(*b.arch.body).Q;
    };
    Eigen::MatrixXd g1 = source_outer(b1), g2 = target_inner(b2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s1(g1), s2(g2);
    Eigen::MatrixXd op = s2.operatorSqrt() * to_eigen(m) * s1.operatorInverseSqrt();
    double sigma = op.jacobiSvd().singularValues()(0);

    MapHeight out;
    out.value = std::log(to_double(finite_prod)) + std::log(sigma);
    out.is_upper_bound = !(b1.hermitian() && b2.hermitian());
    return out;
}

// --- scalar extension to Q(i) ----------------------------------------------

CheckReport scalar_extension_check(const AdelicBundle& b, std::uint64_t seed) {
    const std::size_t n = b.n;
    // Archimedean log volume ratios against the round ball, over R and C.
    double real_ratio, complex_ratio, mc_tol = 0.0;
    if (b.hermitian()) {
        double ld = std::log(to_double(det(b.arch.G)));
        real_ratio = -0.5 * ld;
        complex_ratio = -ld;  // realified Gram G ⊗ I₂
    } else {
        const ConvexBody& c = *b.arch.body;
        real_ratio = std::log(convex::volume(c) / convex::unit_ball_volume(n));
        if (c.kind == RepKind::Ellipsoid) {
            double ld = std::log(to_double(det(c.Q)));
            complex_ratio = -ld;
        } else if (c.kind == RepKind::LpBall) {
            complex_ratio = std::log(convex::lp_ball_volume_complex(n, c.p) /
                                     convex::lp_ball_volume_complex(n, 2.0));
        } else {
            // Monte Carlo on the complexified gauge sup_θ ‖Re(e^{iθ}z)‖ in R^{2n}.
            auto verts = vertex_rep(c);
            double radius = 0;
            for (const auto& v : verts) {
                double s = 0;
                for (const auto& vi : v) s += to_double(vi) * to_double(vi);
                radius = std::max(radius, std::sqrt(s));
            }
            std::mt19937_64 rng(seed);
            const std::size_t samples = 300000;
            std::size_t hits = 0;
            std::vector<double> x(n), y(n), w(n);
            const int thetas = 64;
            for (std::size_t s = 0; s < samples; ++s) {
                for (std::size_t i = 0; i < n; ++i) {
                    x[i] = (2.0 * double(rng() >> 11) * 0x1.0p-53 - 1.0) * radius;
                    y[i] = (2.0 * double(rng() >> 11) * 0x1.0p-53 - 1.0) * radius;
                }
                double g = 0;
                for (int t = 0; t < thetas && g <= 1.0; ++t) {
                    double th = t * std::acos(-1.0) / thetas;
                    for (std::size_t i = 0; i < n; ++i)
                        w[i] = std::cos(th) * x[i] + std::sin(th) * y[i];
                    g = std::max(g, convex::gauge(c, w));
                }
                if (g <= 1.0) ++hits;
            }
            double frac = double(hits) / samples;
            double box = std::pow(2.0 * radius, 2.0 * double(n));
            double vol_c = box * frac;
            complex_ratio = std::log(vol_c) -
                            std::log(convex::lp_ball_volume(2 * n, 2.0));
            mc_tol = 5.0 * std::sqrt(std::max(frac * (1 - frac), 1e-12) / samples) /
                         std::max(frac, 1e-9) +
                     0.05;  // CI plus the θ-grid gauge bias allowance
        }
    }
    // Normalized degrees: the finite parts agree, so the difference is purely
    // archimedean: deg_n(Q(i)) - deg_n(Q) = complex/2 - real = (1/2) log κ.
    double diff = 0.5 * complex_ratio - real_ratio;
    double bound = double(n) * std::log(4.0);

    std::ostringstream inst;
    inst << "n=" << n << (b.hermitian() ? " hermitian" : " body");
    CheckReport r;
    r.name = "scalar_extension";
    r.instance = inst.str();
    r.seed = std::int64_t(seed);
    r.lhs = std::abs(diff);
    r.rhs = bound;
    r.slack = bound - std::abs(diff);
    r.pass = r.slack >= -(1e-9 + mc_tol * double(n));
    if (b.hermitian()) {
        r.pass = r.pass && std::abs(diff) <= 1e-9;
        r.note = "hermitian: degree unchanged under extension";
    } else if (b.arch.body->kind == RepKind::LpBall && b.arch.body->p == convex::inf_p) {
        double kappa = std::exp(complex_ratio - 2.0 * real_ratio);
        double hi = std::exp(std::lgamma(double(n) + 1.0) -
                             2.0 * std::lgamma(1.0 + double(n) / 2.0));
        double lo = hi / std::pow(4.0, double(n));
        r.pass = r.pass && kappa >= lo - 1e-9 && kappa <= hi + 1e-9;
        std::ostringstream note;
        note << "kappa=" << kappa << " in [" << lo << ", " << hi << "]";
        r.note = note.str();
    }
    return r;
}

std::vector<RatVec> vectors_of_height_at_most(const AdelicBundle& b, double a) {
    // A primitive lattice vector has trivial finite norms, so the height is
    // the archimedean gauge; enumerate inside e^a with a John margin.
    RatMat q;
    double margin = 1.0;
    if (b.hermitian()) {
        q = mat_mul(transpose(b.finite.A), mat_mul(b.arch.G, b.finite.A));
    } else {
        auto j = convex::john_ellipsoid(*b.arch.body);
        RatMat jq = from_eigen(j.Q);
        q = mat_mul(transpose(b.finite.A), mat_mul(jq, b.finite.A));
        margin = std::sqrt(double(b.n)) * (1.0 + 1e-9);  // C ⊆ √n·J(C)
    }
    double radius = std::exp(a) * margin;
    auto pts = lattice::enumerate_up_to(q, Rat(radius * radius * (1 + 1e-9)));
    std::vector<RatVec> out;
    for (const auto& z : pts) {
        Int g = 0;
        for (const auto& zi : z) g = gcd(g, zi);
        if (g != 1) continue;
        RatVec zr(b.n);
        for (std::size_t i = 0; i < b.n; ++i) zr[i] = Rat(z[i]);
        RatVec x = mat_vec(b.finite.A, zr);
        if (height_vector(b, x).value <= a + 1e-9) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace avb::bundles

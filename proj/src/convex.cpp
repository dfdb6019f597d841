#include "avb/convex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace avb::convex {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool spans(const std::vector<RatVec>& vecs, std::size_t n) {
    if (vecs.empty()) return false;
    RatMat m(vecs.size(), n);
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vecs[i][j];
    return rank(std::move(m)) == n;
}

RatVec negated(const RatVec& v) {
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    return w;
}

std::string key_of(const RatVec& v) {
    std::string k;
    for (const auto& x : v) k += format_rat(x) + ",";
    return k;
}

}  // namespace

ConvexBody ConvexBody::hpoly(std::size_t n, std::vector<Facet> facets) {
    require(n >= 1, "dimension must be >= 1");
    std::set<std::string> seen;
    std::vector<Facet> closed;
    for (auto& f : facets) {
        require(f.normal.size() == n, "facet normal dimension mismatch");
        require(f.offset > 0, "facet offset must be positive");
        if (seen.insert(key_of(f.normal) + "|" + format_rat(f.offset)).second)
            closed.push_back(f);
    }
    // Complete ± pairs so the body is symmetric by construction.
    for (std::size_t i = 0, m = closed.size(); i < m; ++i) {
        Facet neg{negated(closed[i].normal), closed[i].offset};
        if (seen.insert(key_of(neg.normal) + "|" + format_rat(neg.offset)).second)
            closed.push_back(neg);
    }
    std::vector<RatVec> normals;
    for (auto& f : closed) normals.push_back(f.normal);
    require(spans(normals, n), "H-polytope is unbounded: normals must span");
    ConvexBody c;
    c.n = n;
    c.kind = RepKind::HPoly;
    c.facets = std::move(closed);
    return c;
}

ConvexBody ConvexBody::vpoly(std::size_t n, std::vector<RatVec> vertices) {
    require(n >= 1, "dimension must be >= 1");
    std::set<std::string> seen;
    std::vector<RatVec> closed;
    for (auto& v : vertices) {
        require(v.size() == n, "vertex dimension mismatch");
        if (seen.insert(key_of(v)).second) closed.push_back(v);
    }
    for (std::size_t i = 0, m = closed.size(); i < m; ++i) {
        RatVec neg = negated(closed[i]);
        if (seen.insert(key_of(neg)).second) closed.push_back(neg);
    }
    require(spans(closed, n), "V-polytope is degenerate: vertices must span");
    ConvexBody c;
    c.n = n;
    c.kind = RepKind::VPoly;
    c.vertices = std::move(closed);
    return c;
}

ConvexBody ConvexBody::lp_ball(std::size_t n, double p) {
    require(n >= 1, "dimension must be >= 1");
    require(p >= 1.0, "lp ball needs p in [1, inf]");
    ConvexBody c;
    c.n = n;
    c.kind = RepKind::LpBall;
    c.p = p;
    return c;
}

ConvexBody ConvexBody::ellipsoid(RatMat q) {
    require(q.rows == q.cols && q.rows >= 1, "ellipsoid matrix must be square");
    require(is_positive_definite(q), "ellipsoid matrix must be positive definite");
    ConvexBody c;
    c.n = q.rows;
    c.kind = RepKind::Ellipsoid;
    c.Q = std::move(q);
    return c;
}

ConvexBody ConvexBody::cube(std::size_t n) {
    std::vector<Facet> fs;
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n);
        e[i] = 1;
        fs.push_back({e, 1});
    }
    return hpoly(n, std::move(fs));
}

ConvexBody ConvexBody::cross_polytope(std::size_t n) {
    std::vector<RatVec> vs;
    for (std::size_t i = 0; i < n; ++i) {
        RatVec e(n);
        e[i] = 1;
        vs.push_back(e);
    }
    return vpoly(n, std::move(vs));
}

double gauge(const ConvexBody& c, const std::vector<double>& x) {
    require(x.size() == c.n, "gauge: dimension mismatch");
    switch (c.kind) {
        case RepKind::LpBall: {
            if (c.p == inf_p) {
                double m = 0;
                for (double xi : x) m = std::max(m, std::abs(xi));
                return m;
            }
            double s = 0;
            for (double xi : x) s += std::pow(std::abs(xi), c.p);
            return std::pow(s, 1.0 / c.p);
        }
        case RepKind::Ellipsoid: {
            double s = 0;
            for (std::size_t i = 0; i < c.n; ++i)
                for (std::size_t j = 0; j < c.n; ++j)
                    s += to_double(c.Q(i, j)) * x[i] * x[j];
            return std::sqrt(std::max(0.0, s));
        }
        case RepKind::HPoly: {
            double m = 0;
            for (const auto& f : c.facets) {
                double d = 0;
                for (std::size_t i = 0; i < c.n; ++i) d += to_double(f.normal[i]) * x[i];
                m = std::max(m, d / to_double(f.offset));
            }
            return m;
        }
        case RepKind::VPoly: {
            // Via the exact facet representation of the hull.
            double m = 0;
            for (const auto& f : facet_rep(c)) {
                double d = 0;
                for (std::size_t i = 0; i < c.n; ++i) d += to_double(f.normal[i]) * x[i];
                m = std::max(m, d / to_double(f.offset));
            }
            return m;
        }
    }
    return 0;
}

Rat gauge_rat(const ConvexBody& c, const RatVec& x) {
    require(c.kind == RepKind::HPoly, "exact gauge needs an H-polytope");
    Rat m = 0;
    for (const auto& f : c.facets) m = std::max(m, dot(f.normal, x) / f.offset);
    return m;
}

// --- hull machinery --------------------------------------------------------

namespace {

// Affine hyperplane (a, c) with a·v = c through the given points; empty normal
// if the points do not determine a unique hyperplane.
std::pair<RatVec, Rat> hyperplane_through(const std::vector<RatVec>& pts,
                                          const std::vector<std::size_t>& idx,
                                          std::size_t k) {
    RatMat m(idx.size(), k + 1);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = pts[idx[i]][j];
        m(i, k) = -1;  // a·v - c = 0
    }
    auto ker = kernel(std::move(m));
    if (ker.size() != 1) return {{}, 0};
    RatVec a(ker[0].begin(), ker[0].begin() + k);
    Rat c = ker[0][k];
    return {a, c};
}

struct HullFacet {
    RatVec normal;  // points satisfy normal·v ≤ offset, equality on the facet
    Rat offset;
    std::vector<std::size_t> on;  // indices of points lying on the facet
};

std::vector<HullFacet> hull_facets(const std::vector<RatVec>& pts, std::size_t k) {
    std::vector<HullFacet> out;
    std::set<std::string> seen;
    for (auto& idx : subsets(pts.size(), k)) {
        auto [a, c] = hyperplane_through(pts, idx, k);
        if (a.empty()) continue;
        bool below = true, above = true;
        for (const auto& p : pts) {
            Rat d = dot(a, p) - c;
            if (d > 0) below = false;
            if (d < 0) above = false;
            if (!below && !above) break;
        }
        if (!below && !above) continue;
        if (above) {  // flip so the polytope is on the ≤ side
            a = negated(a);
            c = -c;
        }
        // Canonical scale for dedup: first nonzero coordinate = ±1.
        Rat scale = 0;
        for (const auto& ai : a)
            if (ai != 0) {
                scale = abs(ai);
                break;
            }
        RatVec an(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) an[i] = a[i] / scale;
        Rat cn = c / scale;
        if (!seen.insert(key_of(an) + "|" + format_rat(cn)).second) continue;
        HullFacet f{an, cn, {}};
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(an, pts[i]) == cn) f.on.push_back(i);
        out.push_back(std::move(f));
    }
    return out;
}

// Triangulation of the convex hull of full-dimensional `pts` in R^k, as
// index (k+1)-tuples; cones from pts[0] over the facets avoiding it.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<RatVec>& pts,
                                                  std::size_t k);

std::vector<std::vector<std::size_t>> triangulate_facet(const std::vector<RatVec>& pts,
                                                        const HullFacet& f,
                                                        std::size_t k) {
    // Map the facet into (k-1)-dim rational coordinates and recurse.
    const auto& on = f.on;
    const RatVec& q0 = pts[on[0]];
    std::vector<RatVec> edges;
    for (std::size_t i = 1; i < on.size(); ++i) {
        RatVec e(k);
        for (std::size_t j = 0; j < k; ++j) e[j] = pts[on[i]][j] - q0[j];
        edges.push_back(std::move(e));
    }
    // Pick k-1 independent edges as an exact basis of the facet plane.
    std::vector<RatVec> basis;
    for (const auto& e : edges) {
        auto trial = basis;
        trial.push_back(e);
        RatMat m(trial.size(), k);
        for (std::size_t i = 0; i < trial.size(); ++i)
            for (std::size_t j = 0; j < k; ++j) m(i, j) = trial[i][j];
        if (rank(std::move(m)) == trial.size()) basis.push_back(e);
        if (basis.size() == k - 1) break;
    }
    if (basis.size() != k - 1) return {};  // degenerate facet, measure zero
    RatMat b(k, k - 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) b(i, j) = basis[j][i];
    RatMat btb = mat_mul(transpose(b), b);
    RatMat btb_inv = inverse(btb);
    std::vector<RatVec> coords;
    for (auto i : on) {
        RatVec d(k);
        for (std::size_t j = 0; j < k; ++j) d[j] = pts[i][j] - q0[j];
        coords.push_back(mat_vec(btb_inv, mat_vec(transpose(b), d)));
    }
    auto sub = triangulate(coords, k - 1);
    std::vector<std::vector<std::size_t>> out;
    for (auto& s : sub) {
        std::vector<std::size_t> global;
        for (auto li : s) global.push_back(on[li]);
        out.push_back(std::move(global));
    }
    return out;
}

std::vector<std::vector<std::size_t>> triangulate(const std::vector<RatVec>& pts,
                                                  std::size_t k) {
    if (k == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        if (pts[lo][0] == pts[hi][0]) return {};
        return {{lo, hi}};
    }
    std::vector<std::vector<std::size_t>> out;
    const RatVec& r = pts[0];
    for (const auto& f : hull_facets(pts, k)) {
        if (dot(f.normal, r) == f.offset) continue;  // cone from r would be flat
        for (auto& s : triangulate_facet(pts, f, k)) {
            s.push_back(0);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

Rat polytope_volume(const std::vector<RatVec>& pts, std::size_t n) {
    // Deduplicate points first.
    std::vector<RatVec> uniq;
    std::set<std::string> seen;
    for (const auto& p : pts)
        if (seen.insert(key_of(p)).second) uniq.push_back(p);
    Rat vol = 0;
    Int nfact = factorial(n);
    for (const auto& simplex : triangulate(uniq, n)) {
        RatMat m(n, n);
        const RatVec& base = uniq[simplex.back()];
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = uniq[simplex[i]][j] - base[j];
        vol += abs(det(std::move(m)));
    }
    return vol / Rat(nfact);
}

std::vector<Facet> facet_rep(const ConvexBody& c) {
    switch (c.kind) {
        case RepKind::HPoly:
            return c.facets;
        case RepKind::VPoly: {
            std::vector<Facet> out;
            for (auto& f : hull_facets(c.vertices, c.n)) out.push_back({f.normal, f.offset});
            return out;
        }
        default:
            throw std::invalid_argument("facet_rep: polytope bodies only");
    }
}

std::vector<RatVec> vertex_rep(const ConvexBody& c) {
    switch (c.kind) {
        case RepKind::VPoly: {
            // Keep extreme points only: v is extreme iff it lies on n
            // linearly independent hull facets.
            auto hf = hull_facets(c.vertices, c.n);
            std::vector<RatVec> out;
            for (std::size_t i = 0; i < c.vertices.size(); ++i) {
                std::vector<RatVec> normals;
                for (const auto& f : hf)
                    if (std::find(f.on.begin(), f.on.end(), i) != f.on.end())
                        normals.push_back(f.normal);
                if (spans(normals, c.n)) out.push_back(c.vertices[i]);
            }
            return out;
        }
        case RepKind::HPoly: {
            std::vector<RatVec> out;
            std::set<std::string> seen;
            const auto& fs = c.facets;
            for (auto& idx : subsets(fs.size(), c.n)) {
                RatMat m(c.n, c.n);
                RatVec b(c.n);
                for (std::size_t i = 0; i < c.n; ++i) {
                    for (std::size_t j = 0; j < c.n; ++j) m(i, j) = fs[idx[i]].normal[j];
                    b[i] = fs[idx[i]].offset;
                }
                if (det(m) == 0) continue;
                RatVec x = solve(m, b);
                bool feasible = true;
                for (const auto& f : fs)
                    if (dot(f.normal, x) > f.offset) {
                        feasible = false;
                        break;
                    }
                if (feasible && seen.insert(key_of(x)).second) out.push_back(std::move(x));
            }
            return out;
        }
        default:
            throw std::invalid_argument("vertex_rep: polytope bodies only");
    }
}

ConvexBody polar(const ConvexBody& c) {
    switch (c.kind) {
        case RepKind::LpBall: {
            double q = c.p == 1.0 ? inf_p : (c.p == inf_p ? 1.0 : c.p / (c.p - 1.0));
            return ConvexBody::lp_ball(c.n, q);
        }
        case RepKind::Ellipsoid:
            return ConvexBody::ellipsoid(inverse(c.Q));
        case RepKind::HPoly: {
            std::vector<RatVec> vs;
            for (const auto& f : c.facets) {
                RatVec v(c.n);
                for (std::size_t i = 0; i < c.n; ++i) v[i] = f.normal[i] / f.offset;
                vs.push_back(std::move(v));
            }
            return ConvexBody::vpoly(c.n, std::move(vs));
        }
        case RepKind::VPoly: {
            std::vector<Facet> fs;
            for (const auto& v : c.vertices) fs.push_back({v, 1});
            return ConvexBody::hpoly(c.n, std::move(fs));
        }
    }
    throw std::logic_error("unreachable");
}

ConvexBody linear_image(const ConvexBody& c, const RatMat& t) {
    switch (c.kind) {
        case RepKind::VPoly: {
            std::vector<RatVec> vs;
            for (const auto& v : c.vertices) vs.push_back(mat_vec(t, v));
            return ConvexBody::vpoly(c.n, std::move(vs));
        }
        case RepKind::HPoly: {
            RatMat tinv_t = transpose(inverse(t));
            std::vector<Facet> fs;
            for (const auto& f : c.facets) fs.push_back({mat_vec(tinv_t, f.normal), f.offset});
            return ConvexBody::hpoly(c.n, std::move(fs));
        }
        case RepKind::Ellipsoid: {
            RatMat tinv = inverse(t);
            return ConvexBody::ellipsoid(mat_mul(transpose(tinv), mat_mul(c.Q, tinv)));
        }
        default:
            throw std::invalid_argument("linear_image: lp balls not supported");
    }
}

double lp_ball_volume(std::size_t n, double p) {
    if (p == inf_p) return std::pow(2.0, double(n));
    double log_v = n * (std::log(2.0) + std::lgamma(1.0 + 1.0 / p)) -
                   std::lgamma(1.0 + double(n) / p);
    return std::exp(log_v);
}

double lp_ball_volume_complex(std::size_t n, double p) {
    // Lebesgue volume in R^{2n}; callers apply the 2^n Haar factor themselves.
    if (p == inf_p) return std::pow(std::acos(-1.0), double(n));
    return std::pow(std::acos(-1.0) / 2.0, double(n)) * lp_ball_volume(n, p / 2.0);
}

double unit_ball_volume(std::size_t n) { return lp_ball_volume(n, 2.0); }

double volume(const ConvexBody& c) {
    switch (c.kind) {
        case RepKind::LpBall:
            return lp_ball_volume(c.n, c.p);
        case RepKind::Ellipsoid:
            return unit_ball_volume(c.n) / std::sqrt(to_double(det(c.Q)));
        case RepKind::HPoly:
            return to_double(polytope_volume(vertex_rep(c), c.n));
        case RepKind::VPoly:
            return to_double(polytope_volume(c.vertices, c.n));
    }
    return 0;
}

namespace {

// Axis-aligned box enclosing the body (half-widths per coordinate).
std::vector<double> bounding_halfwidths(const ConvexBody& c) {
    std::vector<double> h(c.n, 0.0);
    switch (c.kind) {
        case RepKind::LpBall:
            std::fill(h.begin(), h.end(), 1.0);
            break;
        case RepKind::Ellipsoid: {
            RatMat qi = inverse(c.Q);
            for (std::size_t i = 0; i < c.n; ++i) h[i] = std::sqrt(to_double(qi(i, i)));
            break;
        }
        case RepKind::VPoly:
            for (const auto& v : c.vertices)
                for (std::size_t i = 0; i < c.n; ++i)
                    h[i] = std::max(h[i], std::abs(to_double(v[i])));
            break;
        case RepKind::HPoly:
            for (const auto& v : vertex_rep(c))
                for (std::size_t i = 0; i < c.n; ++i)
                    h[i] = std::max(h[i], std::abs(to_double(v[i])));
            break;
    }
    return h;
}

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;  // bit-stable across platforms
}

// Fast repeated gauge evaluation with the hull conversion done once.
struct GaugeEval {
    ConvexBody body;
    std::vector<std::pair<std::vector<double>, double>> dfacets;

    explicit GaugeEval(const ConvexBody& c) : body(c) {
        if (c.kind == RepKind::VPoly || c.kind == RepKind::HPoly) {
            for (const auto& f : facet_rep(c)) {
                std::vector<double> a(c.n);
                for (std::size_t i = 0; i < c.n; ++i) a[i] = to_double(f.normal[i]);
                dfacets.emplace_back(std::move(a), to_double(f.offset));
            }
        }
    }

    double operator()(const std::vector<double>& x) const {
        if (!dfacets.empty()) {
            double m = 0;
            for (const auto& [a, off] : dfacets) {
                double d = 0;
                for (std::size_t i = 0; i < a.size(); ++i) d += a[i] * x[i];
                m = std::max(m, d / off);
            }
            return m;
        }
        return gauge(body, x);
    }
};

}  // namespace

McEstimate volume_mc(const ConvexBody& c, std::size_t samples, std::uint64_t seed) {
    require(samples >= 1000, "volume_mc needs at least 1000 samples");
    auto h = bounding_halfwidths(c);
    double box_vol = 1.0;
    for (double hi : h) box_vol *= 2.0 * hi;
    GaugeEval g(c);
    std::mt19937_64 rng(seed);
    std::vector<double> x(c.n);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < c.n; ++i) x[i] = (2.0 * uniform01(rng) - 1.0) * h[i];
        if (g(x) <= 1.0) ++hits;
    }
    double frac = double(hits) / double(samples);
    McEstimate e;
    e.estimate = box_vol * frac;
    e.stderror = box_vol * std::sqrt(std::max(frac * (1.0 - frac), 1e-12 / samples) / samples);
    return e;
}

double mahler_product(const ConvexBody& c) { return volume(c) * volume(polar(c)); }

CheckReport santalo_mahler_check(const ConvexBody& c) {
    double pc = mahler_product(c);
    double upper = std::pow(unit_ball_volume(c.n), 2.0);
    double lower = std::pow(4.0, double(c.n)) /
                   std::pow(to_double(Rat(factorial(c.n))), 2.0);
    std::ostringstream inst;
    inst << "n=" << c.n << " kind=" << int(c.kind);
    auto r = CheckReport::inequality("santalo_mahler", inst.str(), lower, pc, 1e-9);
    r.rhs = upper;
    r.lhs = pc;
    r.slack = std::min(pc - lower, upper - pc);
    r.pass = r.slack >= -1e-9;
    double strong_lower = std::pow(4.0, double(c.n)) / to_double(Rat(factorial(c.n)));
    r.note = pc >= strong_lower - 1e-9 ? "strong factorial lower bound also holds"
                                       : "strong factorial lower bound does not hold";
    return r;
}

CheckReport direct_sum_volume_check(const ConvexBody& c1, const ConvexBody& c2,
                                    double p, std::uint64_t seed) {
    require(p >= 1.0, "direct sum needs p in [1, inf]");
    const std::size_t n = c1.n, m = c2.n;
    double v1 = volume(c1), v2 = volume(c2);

    bool polys = (c1.kind == RepKind::HPoly || c1.kind == RepKind::VPoly) &&
                 (c2.kind == RepKind::HPoly || c2.kind == RepKind::VPoly);
    double vol_sum, ci = 0.0;
    if (p == inf_p && polys) {
        // Product polytope: exact.
        std::vector<RatVec> vs;
        for (const auto& a : vertex_rep(c1))
            for (const auto& b : vertex_rep(c2)) {
                RatVec v = a;
                v.insert(v.end(), b.begin(), b.end());
                vs.push_back(std::move(v));
            }
        vol_sum = to_double(polytope_volume(vs, n + m));
    } else if (p == 1.0 && polys) {
        // Convex hull of the two embedded bodies: exact.
        std::vector<RatVec> vs;
        for (const auto& a : vertex_rep(c1)) {
            RatVec v = a;
            v.resize(n + m, Rat(0));
            vs.push_back(std::move(v));
        }
        for (const auto& b : vertex_rep(c2)) {
            RatVec v(n, Rat(0));
            v.insert(v.end(), b.begin(), b.end());
            vs.push_back(std::move(v));
        }
        vol_sum = to_double(polytope_volume(vs, n + m));
    } else {
        // Monte Carlo on the combined gauge |(j1(x), j2(y))|_p.
        auto h1 = bounding_halfwidths(c1), h2 = bounding_halfwidths(c2);
        GaugeEval g1(c1), g2(c2);
        std::mt19937_64 rng(seed);
        const std::size_t samples = 400000;
        std::size_t hits = 0;
        std::vector<double> x(n), y(m);
        double box = 1.0;
        for (double h : h1) box *= 2 * h;
        for (double h : h2) box *= 2 * h;
        for (std::size_t s = 0; s < samples; ++s) {
            for (std::size_t i = 0; i < n; ++i) x[i] = (2 * uniform01(rng) - 1) * h1[i];
            for (std::size_t i = 0; i < m; ++i) y[i] = (2 * uniform01(rng) - 1) * h2[i];
            double a = g1(x), b = g2(y);
            double j = p == inf_p ? std::max(a, b)
                                  : std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
            if (j <= 1.0) ++hits;
        }
        double frac = double(hits) / samples;
        vol_sum = box * frac;
        ci = 4.0 * box * std::sqrt(std::max(frac * (1 - frac), 1e-12) / samples);
    }

    double ratio = vol_sum / (v1 * v2);
    double gamma_ratio =
        p == inf_p ? 1.0
                   : std::exp(std::lgamma(1.0 + double(n) / p) + std::lgamma(1.0 + double(m) / p) -
                              std::lgamma(1.0 + double(n + m) / p));
    double lower = 1.0 / to_double(Rat(binomial(n + m, n)));
    double tol = ci / (v1 * v2) + 1e-9;

    std::ostringstream inst;
    inst << "n=" << n << " m=" << m << " p=" << p;
    CheckReport r;
    r.name = "direct_sum_volume";
    r.instance = inst.str();
    r.seed = std::int64_t(seed);
    r.lhs = ratio;
    r.rhs = gamma_ratio;
    r.slack = -std::abs(ratio - gamma_ratio);
    r.pass = (ratio >= lower - tol) && (ratio <= 1.0 + tol) &&
             std::abs(ratio - gamma_ratio) <= tol;
    return r;
}

}  // namespace avb::convex

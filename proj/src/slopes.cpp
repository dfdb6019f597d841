#include "avb/slopes.hpp"

#include "avb/ellipsoid.hpp"
#include "avb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace avb::slopes {

namespace {

// Gram of the lattice Z^n in bundle coordinates: Q = AᵀGA.
RatMat lattice_gram(const AdelicBundle& b) {
    if (!b.hermitian())
        throw std::invalid_argument("slopes: hermitian metric required (use polygon_bracket)");
    return mat_mul(transpose(b.finite.A), mat_mul(b.arch.G, b.finite.A));
}

// Fully reduced column HNF: canonical representative of a saturated sublattice.
std::vector<IntVec> canonical_cols(std::vector<IntVec> gens, std::size_t n) {
    auto basis = hnf_basis(std::move(gens), n);
    std::vector<std::size_t> pivot(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::size_t r = 0;
        while (r < n && basis[j][r] == 0) ++r;
        pivot[j] = r;
    }
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t c = 0; c < j; ++c) {
            const Int& p = basis[j][pivot[j]];
            Int q = basis[c][pivot[j]] / p;
            if (basis[c][pivot[j]] - q * p < 0) --q;  // floor division
            if (q != 0)
                for (std::size_t i = 0; i < n; ++i) basis[c][i] -= q * basis[j][i];
        }
    return basis;
}

std::string cols_key(const std::vector<IntVec>& cols) {
    std::ostringstream os;
    for (const auto& c : cols) {
        for (const auto& x : c) os << x << ',';
        os << ';';
    }
    return os.str();
}

// Plücker coordinates (lexicographic r-subset order) of the span of `pick`ed
// integer columns.
IntVec wedge_coords(const std::vector<IntVec>& basis, const std::vector<std::size_t>& pick,
                    std::size_t n, std::size_t r) {
    auto subs = subsets(n, r);
    IntVec w(subs.size());
    for (std::size_t idx = 0; idx < subs.size(); ++idx) {
        RatMat m(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) m(a, b) = Rat(basis[pick[b]][subs[idx][a]]);
        w[idx] = numerator(det(m));
    }
    // canonical sign: first nonzero coordinate positive
    for (const auto& x : w) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

struct WedgeSpace {
    std::size_t n = 0, r = 0;
    std::vector<std::vector<std::size_t>> subs_r, subs_r1;
    std::map<std::vector<std::size_t>, std::size_t> index_r;

    WedgeSpace(std::size_t n_, std::size_t r_) : n(n_), r(r_) {
        subs_r = subsets(n, r);
        subs_r1 = subsets(n, r + 1);
        for (std::size_t i = 0; i < subs_r.size(); ++i) index_r[subs_r[i]] = i;
    }

    // If v is decomposable, returns the saturated canonical basis of the
    // rank-r subspace it spans; otherwise an empty vector.
    std::vector<IntVec> spanned_subspace(const IntVec& v) const {
        // Matrix of x ↦ x ∧ v; its kernel is {x : x ∧ v = 0}, which has
        // dimension r exactly when v is decomposable.
        RatMat w(subs_r1.size(), n);
        for (std::size_t row = 0; row < subs_r1.size(); ++row) {
            const auto& t = subs_r1[row];
            for (std::size_t pos = 0; pos < t.size(); ++pos) {
                std::vector<std::size_t> s;
                s.reserve(r);
                for (std::size_t u = 0; u < t.size(); ++u)
                    if (u != pos) s.push_back(t[u]);
                const Rat coeff = Rat(v[index_r.at(s)]);
                w(row, t[pos]) = (pos % 2 == 0) ? coeff : -coeff;
            }
        }
        auto ker = kernel(w);
        if (ker.size() != r) return {};
        std::vector<IntVec> gens;
        for (const auto& kcol : ker) {
            Int lcm = 1;
            for (const auto& x : kcol) lcm = boost::multiprecision::lcm(lcm, denominator(x));
            IntVec g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = numerator(Rat(kcol[i] * lcm));
            gens.push_back(std::move(g));
        }
        return canonical_cols(saturate(gens, n), n);
    }
};

std::string gram_instance(const RatMat& q) {
    std::ostringstream os;
    os << "latticeGram=[";
    for (std::size_t i = 0; i < q.rows; ++i)
        for (std::size_t j = 0; j < q.cols; ++j)
            os << format_rat(q(i, j)) << ((i + 1 == q.rows && j + 1 == q.cols) ? "]" : " ");
    return os.str();
}

// The polygon is the concave upper envelope of the max-degree points
// (r, raw[r]): at non-break ranks the best sublattice can sit strictly below
// the chord, but the slope sequence is read off the envelope. Replaces the
// vertex values by the envelope, recomputes the slopes, and drops achievers at
// ranks that fall strictly below the envelope (nothing attains P there).
void concavify(CanonicalPolygon& pg) {
    const std::size_t n = pg.n;
    std::vector<std::size_t> hull{0};
    for (std::size_t r = 1; r <= n; ++r) {
        while (hull.size() >= 2) {
            std::size_t a = hull[hull.size() - 2], b = hull.back();
            // keep slopes strictly decreasing along the hull
            double s1 = (pg.vertices[b] - pg.vertices[a]) / double(b - a);
            double s2 = (pg.vertices[r] - pg.vertices[b]) / double(r - b);
            if (s2 <= s1) break;
            hull.pop_back();
        }
        hull.push_back(r);
    }
    std::vector<double> env(n + 1);
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        std::size_t a = hull[k], b = hull[k + 1];
        double s = (pg.vertices[b] - pg.vertices[a]) / double(b - a);
        for (std::size_t r = a; r <= b; ++r)
            env[r] = pg.vertices[a] + s * double(r - a);
    }
    env[0] = 0.0;
    env[n] = pg.vertices[n];
    for (std::size_t r = 0; r <= n; ++r) {
        if (pg.vertices[r] < env[r] - 1e-12) pg.achievers[r].clear();
        pg.vertices[r] = env[r];
    }
    pg.slopes.resize(n);
    for (std::size_t i = 1; i <= n; ++i) pg.slopes[i - 1] = pg.vertices[i] - pg.vertices[i - 1];
}

Rat rat_of(double x) {
    const long long den = 1'000'000'000LL;
    return Rat(Int(std::llround(x * double(den))), Int(den));
}

}  // namespace

double CanonicalPolygon::value_at(double x) const {
    if (x <= 0) return 0.0;
    if (x >= double(n)) return vertices[n];
    const std::size_t r = std::size_t(x);
    return vertices[r] + (x - double(r)) * (vertices[r + 1] - vertices[r]);
}

double slope(const AdelicBundle& b) {
    if (b.n == 0) return -std::numeric_limits<double>::infinity();
    return bundles::degree(b) / double(b.n);
}

CanonicalPolygon canonical_polygon(const AdelicBundle& b, double radius_factor) {
    const std::size_t n = b.n;
    if (n == 0 || n > 8) throw std::invalid_argument("canonical_polygon: rank guard 1..8");
    RatMat q = lattice_gram(b);

    CanonicalPolygon pg;
    pg.n = n;
    pg.vertices.assign(n + 1, 0.0);
    pg.achievers.assign(n + 1, {});
    pg.achievers[0].push_back({});
    std::vector<IntVec> full(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) full[i][i] = 1;
    pg.achievers[n].push_back(full);
    pg.vertices[n] = -0.5 * std::log(to_double(det(q)));

    bool all_certified = true;
    auto hk = lattice::hkz(q);

    for (std::size_t r = 1; r < n; ++r) {
        RatMat qr = compound(q, r);
        // Seed: cheapest r-wedge of the HKZ-reduced basis.
        Rat incumbent = -1;
        std::vector<std::size_t> best_pick;
        for (const auto& s : subsets(n, r)) {
            std::vector<IntVec> cols;
            for (auto i : s) cols.push_back(hk[i]);
            Rat d = det(lattice::gram_of(q, cols));
            if (incumbent < 0 || d < incumbent) {
                incumbent = d;
                best_pick = s;
            }
        }
        IntVec seed = wedge_coords(hk, best_pick, n, r);

        WedgeSpace ws(n, r);
        Rat bound = incumbent * rat_of(std::max(1e-6, radius_factor * radius_factor));
        bool certified = false;
        Rat best = -1;
        std::map<std::string, std::vector<IntVec>> achievers;
        for (int round = 0; round < 4; ++round) {
            auto cands = lattice::enumerate_up_to(qr, bound);
            cands.push_back(seed);  // the seed is decomposable; keep it as fallback
            best = -1;
            achievers.clear();
            for (const auto& v : cands) {
                Rat n2 = lattice::norm2(qr, v);
                if (best >= 0 && n2 > best) continue;
                auto span = ws.spanned_subspace(v);
                if (span.empty()) continue;
                if (best < 0 || n2 < best) {
                    best = n2;
                    achievers.clear();
                }
                achievers.emplace(cols_key(span), std::move(span));
            }
            if (best >= 0 && best <= bound) {
                certified = true;  // every shorter decomposable vector was enumerated
                break;
            }
            bound = bound * Rat(9, 4);  // escalate radius ×1.5
        }
        all_certified = all_certified && certified;
        pg.vertices[r] = -0.5 * std::log(to_double(best));
        for (auto& [key, span] : achievers) pg.achievers[r].push_back(std::move(span));
    }

    concavify(pg);
    pg.certified = all_certified;
    return pg;
}

CanonicalPolygon polygon_exhaustive(const AdelicBundle& b) {
    const std::size_t n = b.n;
    if (n == 0 || n > 3) throw std::invalid_argument("polygon_exhaustive: rank guard 1..3");
    RatMat q = lattice_gram(b);

    CanonicalPolygon pg;
    pg.n = n;
    pg.vertices.assign(n + 1, 0.0);
    pg.achievers.assign(n + 1, {});
    pg.achievers[0].push_back({});
    std::vector<IntVec> full(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) full[i][i] = 1;
    pg.achievers[n].push_back(full);
    pg.vertices[n] = -0.5 * std::log(to_double(det(q)));

    auto hk = lattice::hkz(q);
    Rat maxn2 = 0;
    for (const auto& v : hk) maxn2 = std::max(maxn2, lattice::norm2(q, v));
    auto cands = lattice::enumerate_up_to(q, 4 * maxn2);

    for (std::size_t r = 1; r < n; ++r) {
        Rat best = -1;
        std::map<std::string, std::vector<IntVec>> achievers;
        std::map<std::string, Rat> seen;
        std::vector<std::size_t> idx(r);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
            if (pos == r) {
                std::vector<IntVec> cols;
                for (auto i : idx) cols.push_back(cands[i]);
                auto sat = canonical_cols(saturate(cols, n), n);
                if (sat.size() != r) return;  // dependent set
                auto key = cols_key(sat);
                auto it = seen.find(key);
                Rat d;
                if (it != seen.end()) {
                    d = it->second;
                } else {
                    d = det(lattice::gram_of(q, sat));
                    seen.emplace(key, d);
                }
                if (best < 0 || d < best) {
                    best = d;
                    achievers.clear();
                }
                if (d == best) achievers.emplace(key, std::move(sat));
                return;
            }
            for (std::size_t i = from; i < cands.size(); ++i) {
                idx[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        pg.vertices[r] = -0.5 * std::log(to_double(best));
        for (auto& [key, span] : achievers) pg.achievers[r].push_back(std::move(span));
    }

    concavify(pg);
    pg.certified = false;  // oracle output: correct by exhaustion at test scale, not certified
    return pg;
}

double body_sandwich_factor(const convex::ConvexBody& c) {
    using convex::RepKind;
    const double n = double(c.n);
    switch (c.kind) {
        case RepKind::Ellipsoid:
            return 1.0;
        case RepKind::LpBall: {
            const double ip = std::isinf(c.p) ? 0.0 : 1.0 / c.p;
            return std::pow(n, std::fabs(0.5 - ip));
        }
        case RepKind::HPoly:
        case RepKind::VPoly: {
            auto j = convex::john_ellipsoid(c);
            auto verts = convex::vertex_rep(c);
            double a = 0.0;
            for (const auto& v : verts) {
                Eigen::VectorXd x(long(c.n));
                for (std::size_t i = 0; i < c.n; ++i) x[long(i)] = to_double(v[i]);
                a = std::max(a, std::sqrt(x.dot(j.Q * x)));
            }
            return std::max(1.0, std::min(std::sqrt(n), a * (1.0 + 1e-9)));
        }
    }
    throw std::logic_error("body_sandwich_factor: unknown representation");
}

PolygonBracket polygon_bracket(const AdelicBundle& b, double radius_factor) {
    PolygonBracket out;
    if (b.hermitian()) {
        out.lower = canonical_polygon(b, radius_factor);
        out.upper = out.lower;
        out.outer = out.lower;
        out.log_delta_upper = 0.0;
        return out;
    }
    out.log_delta_upper = std::log(body_sandwich_factor(*b.arch.body));
    out.lower = canonical_polygon(bundles::john_bundle(b), radius_factor);
    out.outer = canonical_polygon(bundles::lowner_bundle(b), radius_factor);
    out.upper = out.lower;
    for (std::size_t r = 0; r <= out.upper.n; ++r)
        out.upper.vertices[r] += double(r) * out.log_delta_upper;
    for (auto& s : out.upper.slopes) s += out.log_delta_upper;
    return out;
}

double mu_max(const AdelicBundle& b) {
    auto pg = canonical_polygon(b);
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 1; r <= pg.n; ++r) m = std::max(m, pg.vertices[r] / double(r));
    return m;
}

double mu_min(const AdelicBundle& b) {
    auto pg = canonical_polygon(b);
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < pg.n; ++r)
        m = std::min(m, (pg.vertices[pg.n] - pg.vertices[r]) / double(pg.n - r));
    return m;
}

std::pair<double, double> mu_max_bracket(const AdelicBundle& b) {
    if (b.hermitian()) {
        double m = mu_max(b);
        return {m, m};
    }
    double lo = mu_max(bundles::john_bundle(b));
    double ld = std::log(body_sandwich_factor(*b.arch.body));
    return {lo, lo + ld};
}

std::pair<double, double> mu_min_bracket(const AdelicBundle& b) {
    if (b.hermitian()) {
        double m = mu_min(b);
        return {m, m};
    }
    double mj = mu_min(bundles::john_bundle(b));
    double ld = std::log(body_sandwich_factor(*b.arch.body));
    return {mj - double(b.n - 1) * ld, mj + double(b.n) * ld};
}

HNFiltration hn_filtration(const AdelicBundle& b, double radius_factor) {
    auto pg = canonical_polygon(b, radius_factor);
    if (!pg.certified)
        throw std::runtime_error("hn_filtration: polygon not certified; raise the radius factor");
    const std::size_t n = pg.n;

    HNFiltration f;
    f.steps.push_back({0, 0.0, {}});
    for (std::size_t r = 1; r <= n; ++r) {
        const bool breaks = (r == n) || (pg.slopes[r - 1] - pg.slopes[r] > 1e-9);
        if (!breaks) continue;
        if (pg.achievers[r].size() != 1)
            throw std::logic_error("hn_filtration: non-unique achiever at a break rank");
        f.steps.push_back({r, pg.vertices[r], pg.achievers[r][0]});
    }
    // Nesting: each step's basis must lie in the span of the next one.
    for (std::size_t s = 1; s + 1 < f.steps.size(); ++s) {
        const auto& small = f.steps[s].basis;
        const auto& big = f.steps[s + 1].basis;
        RatMat m(n, small.size() + big.size());
        for (std::size_t j = 0; j < big.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) m(i, j) = Rat(big[j][i]);
        for (std::size_t j = 0; j < small.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) m(i, big.size() + j) = Rat(small[j][i]);
        if (rank(m) != big.size())
            throw std::logic_error("hn_filtration: achiever chain is not nested");
    }
    return f;
}

bool is_semistable(const AdelicBundle& b) {
    auto pg = canonical_polygon(b);
    if (!pg.certified) throw std::runtime_error("is_semistable: polygon not certified");
    auto [lo, hi] = std::minmax_element(pg.slopes.begin(), pg.slopes.end());
    return *hi - *lo <= 1e-9;
}

CheckReport mu_i_duality_check(const AdelicBundle& b) {
    auto pg = canonical_polygon(b);
    auto pgd = canonical_polygon(bundles::dual(b));
    const std::size_t n = pg.n;
    double worst = 0.0;
    double wl = 0.0, wr = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double l = pgd.slopes[i - 1];
        double r = -pg.slopes[n - i];
        if (std::fabs(l - r) >= worst) {
            worst = std::fabs(l - r);
            wl = l;
            wr = r;
        }
    }
    auto rep = CheckReport::equality("slope-duality", gram_instance(lattice_gram(b)), wl, wr);
    return rep.also_require(pg.certified && pgd.certified);
}

CheckReport minimax_check(const AdelicBundle& b, std::size_t i) {
    auto pg = canonical_polygon(b);
    const std::size_t n = pg.n;
    if (i < 1 || i > n) throw std::invalid_argument("minimax_check: index out of range");
    RatMat q = lattice_gram(b);

    auto contains = [&](const std::vector<IntVec>& big, const std::vector<IntVec>& small) {
        RatMat m(n, big.size() + small.size());
        for (std::size_t j = 0; j < big.size(); ++j)
            for (std::size_t t = 0; t < n; ++t) m(t, j) = Rat(big[j][t]);
        for (std::size_t j = 0; j < small.size(); ++j)
            for (std::size_t t = 0; t < n; ++t) m(t, big.size() + j) = Rat(small[j][t]);
        return rank(m) == big.size();
    };
    auto subspace_det = [&](const std::vector<IntVec>& cols) -> Rat {
        if (cols.empty()) return Rat(1);
        return det(lattice::gram_of(q, cols));
    };

    // min over small achievers E2 (rank ≤ i−1) of max over large subspaces
    // E1 ⊇ E2 (rank ≥ i) of the quotient slope. The large side enumerates
    // achievers plus saturated sums E2 + achiever, which is enough to attain
    // the optimum: the canonical-filtration pair bracketing rank i realizes
    // the equality.
    double minimax = std::numeric_limits<double>::infinity();
    for (std::size_t r2 = 0; r2 < i; ++r2) {
        for (const auto& e2 : pg.achievers[r2]) {
            Rat d2 = subspace_det(e2);
            double inner = -std::numeric_limits<double>::infinity();
            auto consider = [&](const std::vector<IntVec>& e1) {
                if (e1.size() < i || !contains(e1, e2)) return;
                double s = -0.5 * std::log(to_double(subspace_det(e1) / d2)) /
                           double(e1.size() - r2);
                inner = std::max(inner, s);
            };
            for (std::size_t r1 = i; r1 <= n; ++r1)
                for (const auto& e1 : pg.achievers[r1]) consider(e1);
            for (std::size_t r1 = 1; r1 <= n; ++r1)
                for (const auto& w : pg.achievers[r1]) {
                    auto gens = e2;
                    gens.insert(gens.end(), w.begin(), w.end());
                    consider(saturate(gens, n));
                }
            minimax = std::min(minimax, inner);
        }
    }
    auto rep = CheckReport::equality("slope-minimax", gram_instance(q), pg.slopes[i - 1], minimax);
    return rep.also_require(pg.certified);
}

CheckReport tensor_line_shift_check(const AdelicBundle& b, const AdelicBundle& line) {
    if (line.n != 1) throw std::invalid_argument("tensor_line_shift_check: line must have rank 1");
    auto pg = canonical_polygon(b);
    auto pgt = canonical_polygon(bundles::tensor_g2(b, line));
    const double dl = bundles::degree(line);
    double worst = 0.0, wl = 0.0, wr = 0.0;
    for (std::size_t r = 0; r <= pg.n; ++r) {
        double l = pgt.vertices[r];
        double rr = pg.vertices[r] + double(r) * dl;
        if (std::fabs(l - rr) >= worst) {
            worst = std::fabs(l - rr);
            wl = l;
            wr = rr;
        }
    }
    auto rep = CheckReport::equality("tensor-line-shift", gram_instance(lattice_gram(b)), wl, wr);
    return rep.also_require(pg.certified && pgt.certified);
}

}  // namespace avb::slopes

#include "avb/minima.hpp"

#include "avb/ellipsoid.hpp"
#include "avb/lattice.hpp"
#include "avb/slopes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace avb::minima {

namespace {

RatMat lattice_gram(const AdelicBundle& b) {
    return mat_mul(transpose(b.finite.A), mat_mul(b.arch.G, b.finite.A));
}

std::string instance_string(const AdelicBundle& b) {
    std::ostringstream os;
    os << "n=" << b.n << ";detA=" << format_rat(det(b.finite.A))
       << (b.hermitian() ? ";metric=gram" : ";metric=body");
    return os.str();
}

// Greedy selection of n independent vectors from candidates sorted by size.
std::vector<std::size_t> greedy_independent(const std::vector<IntVec>& cands, std::size_t n) {
    std::vector<std::size_t> picked;
    RatMat m(n, n);
    for (std::size_t c = 0; c < cands.size() && picked.size() < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) m(i, picked.size()) = Rat(cands[c][i]);
        RatMat sub(n, picked.size() + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= picked.size(); ++j) sub(i, j) = m(i, j);
        if (rank(sub) == picked.size() + 1) picked.push_back(c);
    }
    if (picked.size() < n) throw std::logic_error("successive_minima: candidate set too small");
    return picked;
}

MinimaResult hermitian_minima(const RatMat& q) {
    const std::size_t n = q.rows;
    auto hk = lattice::hkz(q);
    Rat bound = 0;
    for (const auto& v : hk) bound = std::max(bound, lattice::norm2(q, v));
    auto cands = lattice::enumerate_up_to(q, bound);
    std::stable_sort(cands.begin(), cands.end(), [&](const IntVec& a, const IntVec& b) {
        return lattice::norm2(q, a) < lattice::norm2(q, b);
    });
    auto picked = greedy_independent(cands, n);
    MinimaResult out;
    for (auto c : picked) {
        Rat n2 = lattice::norm2(q, cands[c]);
        out.lambda2_exact.push_back(n2);
        out.lambdas.push_back(std::sqrt(to_double(n2)));
        out.witnesses.push_back(cands[c]);
    }
    return out;
}

double body_gauge_of_lattice_vec(const AdelicBundle& b, const IntVec& z) {
    RatVec zr(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zr[i] = Rat(z[i]);
    RatVec x = mat_vec(b.finite.A, zr);
    std::vector<double> xd(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xd[i] = to_double(x[i]);
    return convex::gauge(*b.arch.body, xd);
}

}  // namespace

MinimaResult successive_minima(const AdelicBundle& b) {
    const std::size_t n = b.n;
    if (n == 0 || n > 8) throw std::invalid_argument("successive_minima: rank guard 1..8");
    if (b.hermitian()) return hermitian_minima(lattice_gram(b));

    // Body metric: all candidates with body-gauge ≤ λ_n of the inscribed
    // ellipsoid live inside the matching enclosing-ellipsoid ball.
    auto jm = hermitian_minima(lattice_gram(bundles::john_bundle(b)));
    Rat bound2 = jm.lambda2_exact.back() * Rat(1000001, 1000000);
    RatMat ql = lattice_gram(bundles::lowner_bundle(b));
    auto cands = lattice::enumerate_up_to(ql, bound2);
    std::vector<double> gauges(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) gauges[i] = body_gauge_of_lattice_vec(b, cands[i]);
    std::vector<std::size_t> order(cands.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t c) { return gauges[a] < gauges[c]; });
    std::vector<IntVec> sorted;
    for (auto i : order) sorted.push_back(cands[i]);
    auto picked = greedy_independent(sorted, n);
    MinimaResult out;
    for (auto c : picked) {
        out.lambdas.push_back(body_gauge_of_lattice_vec(b, sorted[c]));
        out.witnesses.push_back(sorted[c]);
    }
    return out;
}

CheckReport minkowski_second_check(const AdelicBundle& b) {
    const std::size_t n = b.n;
    auto mr = successive_minima(b);
    double log_prod = 0;
    for (double l : mr.lambdas) log_prod += std::log(l);
    const double log_covol = std::log(std::fabs(to_double(det(b.finite.A))));
    double log_volb, log_vr;
    if (b.hermitian()) {
        log_volb = std::log(convex::unit_ball_volume(n)) -
                   0.5 * std::log(to_double(det(b.arch.G)));
        log_vr = 0.0;
    } else {
        log_volb = std::log(convex::volume(*b.arch.body));
        log_vr = std::log(convex::volume_ratio(*b.arch.body));
    }
    const double upper = n * std::log(2.0) + log_covol - log_volb + n * log_vr;
    auto rep = CheckReport::inequality("minkowski-second", instance_string(b), log_prod, upper);
    // companion lower bound: Πλ·(vol B/covol) ≥ 2^n/n!
    const double lower_lhs = n * std::log(2.0) - std::log(to_double(Rat(factorial(n))));
    const double lower_rhs = log_prod + log_volb - log_covol;
    rep.also_require(lower_lhs <= lower_rhs + 1e-9);
    std::ostringstream os;
    os << "lower bound: " << lower_lhs << " <= " << lower_rhs;
    rep.note = os.str();
    return rep;
}

double comparison_constant(std::size_t n) {
    return n * std::log(2.0) - std::log(convex::unit_ball_volume(n));
}

CheckReport minima_comparison_check(const AdelicBundle& b) {
    const std::size_t n = b.n;
    auto mr = successive_minima(b);
    const double c = comparison_constant(n);

    CheckReport rep;
    rep.name = "minima-slope-comparison";
    rep.instance = instance_string(b);
    double min_slack = std::numeric_limits<double>::infinity();

    if (b.hermitian()) {
        auto pg = slopes::canonical_polygon(b);
        for (std::size_t i = 1; i <= n; ++i) {
            const double v = pg.slopes[i - 1] + std::log(mr.lambdas[i - 1]);
            const double up = (double(i) / double(n)) * c;
            if (std::min(v, up - v) < min_slack) {
                min_slack = std::min(v, up - v);
                rep.lhs = v;
                rep.rhs = up;
            }
        }
        rep.sound_direction_only = false;
        rep.pass = (min_slack >= -1e-9) && pg.certified;
    } else {
        auto pgj = slopes::canonical_polygon(bundles::john_bundle(b));
        const double ld = std::log(slopes::body_sandwich_factor(*b.arch.body));
        double info_low = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i <= n; ++i) {
            const double mu_up = pgj.slopes[i - 1] + double(i) * ld;
            const double mu_lo = pgj.slopes[i - 1] - double(i - 1) * ld;
            const double v_up = mu_up + std::log(mr.lambdas[i - 1]);
            const double up = (double(i) / double(n)) * c + double(i) * ld;
            if (up - v_up < min_slack) {
                min_slack = up - v_up;
                rep.lhs = v_up;
                rep.rhs = up;
            }
            // lower side needs a lower bound on λ, which the lattice minima
            // cannot certify; report only
            info_low = std::min(info_low, mu_lo + std::log(mr.lambdas[i - 1]) + double(i) * ld);
        }
        rep.sound_direction_only = true;
        rep.pass = (min_slack >= -1e-9) && pgj.certified;
        std::ostringstream os;
        os << "informational lower-side margin: " << info_low;
        rep.note = os.str();
    }
    rep.slack = min_slack;
    return rep;
}

CheckReport finite_rescaling_probe(const AdelicBundle& b) {
    auto base = successive_minima(b);
    CheckReport rep;
    rep.name = "finite-rescaling-probe";
    rep.instance = instance_string(b);
    rep.pass = true;
    rep.sound_direction_only = true;
    std::ostringstream os;
    bool improved = false;
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (int e : {-1, 1}) {
            const Rat a = (e == 1) ? Rat(p) : Rat(1, Int(p));
            const double compensation = (e == 1) ? 1.0 / double(p) : double(p);
            auto mr = successive_minima(bundles::scale(b, a, Rat(1)));
            for (std::size_t i = 0; i < b.n; ++i) {
                const double cand = mr.lambdas[i] * compensation;
                if (cand < base.lambdas[i] * (1.0 - 1e-9)) {
                    improved = true;
                    os << "improvement at p=" << p << " exp=" << e << " i=" << (i + 1) << ": "
                       << cand << " < " << base.lambdas[i] << "; ";
                }
            }
        }
    }
    rep.note = improved ? os.str() : "no finite-rescaling improvement found";
    return rep;
}

}  // namespace avb::minima

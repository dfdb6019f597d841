#include "avb/sympow.hpp"

#include "avb/lattice.hpp"
#include "avb/slopes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace avb::sympow {

namespace {

// All exponent vectors (i_1,…,i_n) with Σ i_k = ℓ, lexicographically
// decreasing in the leading entries.
std::vector<std::vector<int>> exponents(std::size_t n, std::size_t ell) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == n) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, int(ell));
    return out;
}

std::string mat_instance(const RatMat& m) {
    std::ostringstream os;
    os << "M=[";
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            os << format_rat(m(i, j)) << ((i + 1 == m.rows && j + 1 == m.cols) ? "]" : " ");
    return os.str();
}

// S^ℓ(M) in the monomial basis x^a: column a is the expansion of
// ∏_j (M·x)_j^{a_j}.
RatMat sym_power_matrix(const RatMat& m, std::size_t ell,
                        const std::vector<std::vector<int>>& exps) {
    const std::size_t n = m.rows;
    const std::size_t big = exps.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < big; ++i) index[exps[i]] = i;

    RatMat s(big, big);
    for (std::size_t col = 0; col < big; ++col) {
        std::map<std::vector<int>, Rat> poly{{std::vector<int>(n, 0), Rat(1)}};
        for (std::size_t j = 0; j < n; ++j)
            for (int rep = 0; rep < exps[col][j]; ++rep) {
                std::map<std::vector<int>, Rat> next;
                for (const auto& [e, c] : poly)
                    for (std::size_t i = 0; i < n; ++i) {
                        if (m(i, j) == 0) continue;
                        auto e2 = e;
                        ++e2[i];
                        next[e2] += c * m(i, j);
                    }
                poly = std::move(next);
            }
        for (const auto& [e, c] : poly) s(index.at(e), col) = c;
    }
    return s;
}

}  // namespace

double harmonic(std::size_t n) {
    double h = 0;
    for (std::size_t k = 1; k <= n; ++k) h += 1.0 / double(k);
    return h;
}

GammaValue gamma_nl(std::size_t n, std::size_t ell) {
    if (n < 1) throw std::invalid_argument("gamma_nl: n >= 1 required");
    if (binomial(ell + n - 1, n - 1) > 10'000'000)
        throw std::invalid_argument("gamma_nl: size guard exceeded");
    auto exps = exponents(n, ell);
    double sum = 0;
    for (const auto& e : exps) {
        if (ell <= 20) {
            Int multinom = factorial(ell);
            for (int k : e) multinom /= factorial(std::size_t(k));
            sum += std::log(Rat(multinom).convert_to<double>());
        } else {
            double lg = std::lgamma(double(ell) + 1.0);
            for (int k : e) lg -= std::lgamma(double(k) + 1.0);
            sum += lg;
        }
    }
    GammaValue g;
    g.n = n;
    g.ell = ell;
    g.log_value = sum / double(exps.size());
    return g;
}

CheckReport det_sympow_identity_check(const RatMat& m, std::size_t ell) {
    const std::size_t n = m.rows;
    Rat d = det(m);
    if (d == 0) throw std::invalid_argument("det_sympow_identity_check: singular matrix");
    if (binomial(ell + n - 1, n - 1) > 200)
        throw std::invalid_argument("det_sympow_identity_check: size guard exceeded");
    auto exps = exponents(n, ell);
    Rat lhs = det(sym_power_matrix(m, ell, exps));
    Rat rhs = 1;
    Int e = binomial(ell + n - 1, n);
    for (Int k = 0; k < e; ++k) rhs *= d;

    CheckReport rep;
    rep.name = "det-sym-power";
    std::ostringstream os;
    os << mat_instance(m) << ";ell=" << ell;
    rep.instance = os.str();
    rep.lhs = to_double(lhs);
    rep.rhs = to_double(rhs);
    rep.pass = (lhs == rhs);  // exact rational comparison
    rep.slack = rep.pass ? 0.0 : -std::fabs(rep.lhs - rep.rhs);
    return rep;
}

CheckReport inverse_norm_bound_check(const RatMat& m) {
    const std::size_t n = m.rows;
    Rat d = det(m);
    if (d == 0) throw std::invalid_argument("inverse_norm_bound_check: singular matrix");
    RatMat inv = inverse(m);

    // Archimedean regime: Hilbert–Schmidt norms.
    auto hs2 = [](const RatMat& x) {
        Rat s = 0;
        for (const auto& v : x.a) s += v * v;
        return s;
    };
    const double lhs = 0.5 * std::log(to_double(hs2(inv)));
    const double rhs =
        0.5 * double(n - 1) * std::log(to_double(hs2(m))) - std::log(std::fabs(to_double(d)));
    auto rep = CheckReport::inequality("inverse-norm-bound", mat_instance(m), lhs, rhs);

    // Finite regime: max-entry p-adic norm at every prime dividing the data.
    std::set<std::uint64_t> support{2};
    for (auto p : places::prime_support(d)) support.insert(p);
    auto max_norm = [&](const RatMat& x, const places::Place& v) {
        Rat best = 0;
        for (const auto& e : x.a)
            if (e != 0) best = std::max(best, places::abs_value_exact(e, v));
        return best;
    };
    bool finite_ok = true;
    for (auto p : support) {
        auto v = places::Place::finite(p);
        Rat l = max_norm(inv, v);
        Rat r = 1;
        Rat nm = max_norm(m, v);
        for (std::size_t k = 0; k + 1 < n; ++k) r *= nm;
        r /= places::abs_value_exact(d, v);
        finite_ok = finite_ok && (l <= r);
    }
    rep.also_require(finite_ok);
    return rep;
}

CheckReport sympow_slope_check(const AdelicBundle& b, std::size_t ell) {
    auto sb = bundles::symmetric(b, ell);
    const double lhs = slopes::slope(sb);
    const double rhs = double(ell) * slopes::slope(b) + 0.5 * gamma_nl(b.n, ell).log_value;
    std::ostringstream os;
    os << "n=" << b.n << ";ell=" << ell;
    return CheckReport::equality("sym-power-slope", os.str(), lhs, rhs, 1e-8);
}

CheckReport sympow_mumax_check(const AdelicBundle& b, std::size_t ell) {
    auto sb = bundles::symmetric(b, ell);
    const double diff = slopes::mu_max(sb) - double(ell) * slopes::mu_max(b);
    const double bound = 2.0 * double(ell) * double(b.n) * std::log(double(b.n));
    std::ostringstream os;
    os << "n=" << b.n << ";ell=" << ell;
    auto rep = CheckReport::inequality("sym-power-mu-max", os.str(), diff, bound, 1e-8);
    rep.also_require(diff >= -1e-8);
    return rep;
}

CheckReport siegel_check(const AdelicBundle& b) {
    if (!b.hermitian()) throw std::invalid_argument("siegel_check: hermitian metric required");
    const std::size_t n = b.n;
    RatMat q = mat_mul(transpose(b.finite.A), mat_mul(b.arch.G, b.finite.A));
    auto basis = lattice::hkz(q);
    double sum_h = 0;
    for (const auto& z : basis) {
        RatVec zr(n);
        for (std::size_t i = 0; i < n; ++i) zr[i] = Rat(z[i]);
        sum_h += bundles::height_vector(b, mat_vec(b.finite.A, zr)).value;
    }
    const double lhs = sum_h + bundles::degree(b);
    const double rhs = 0.5 * double(n) * std::log(double(n));
    std::ostringstream os;
    os << "n=" << n << ";detQ=" << format_rat(det(q));
    return CheckReport::inequality("short-basis-witness", os.str(), lhs, rhs);
}

}  // namespace avb::sympow

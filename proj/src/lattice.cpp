#include "avb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace avb::lattice {

Rat norm2(const RatMat& q, const IntVec& x) {
    RatVec xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
    return quad_form(q, xr, xr);
}

RatMat gram_of(const RatMat& q, const std::vector<IntVec>& u) {
    const std::size_t k = u.size();
    RatMat g(k, k);
    std::vector<RatVec> qu;
    for (const auto& col : u) {
        RatVec c(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) c[i] = Rat(col[i]);
        qu.push_back(mat_vec(q, c));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rat s = 0;
            for (std::size_t t = 0; t < u[i].size(); ++t) s += Rat(u[i][t]) * qu[j][t];
            g(i, j) = s;
        }
    return g;
}

std::vector<IntVec> complete_basis(const IntVec& v) {
    const std::size_t k = v.size();
    std::vector<IntVec> cols(k, IntVec(1));
    for (std::size_t j = 0; j < k; ++j) cols[j][0] = v[j];
    std::vector<IntVec> u;
    col_hnf_transform(cols, &u);  // vᵀ·U = [g, 0, …, 0]
    if (cols[0][0] != 1 && cols[0][0] != -1)
        throw std::invalid_argument("complete_basis: vector is not primitive");
    if (cols[0][0] == -1)
        for (auto& x : u[0]) x = -x;
    // B = (Uᵀ)⁻¹ is unimodular with B·e_1 = v.
    RatMat ut(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) ut(i, j) = Rat(u[i][j]);
    RatMat b = inverse(ut);
    std::vector<IntVec> out(k, IntVec(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            if (denominator(b(i, j)) != 1)
                throw std::logic_error("complete_basis: transform not integral");
            out[j][i] = numerator(b(i, j));
        }
    return out;
}

namespace {

Int round_rat(const Rat& x) {
    // nearest integer, ties toward -inf
    Int num = numerator(x), den = denominator(x);
    Int twice = 2 * num + den;
    Int q = twice / (2 * den);
    if (twice < 0 && twice % (2 * den) != 0) --q;
    return q;
}

// Exact Gram-Schmidt data of basis columns under Q: squared norms B_i of the
// orthogonalized vectors and coefficients mu(i,j), j < i.
void gram_schmidt(const RatMat& g, std::vector<Rat>& bnorm, RatMat& mu) {
    const std::size_t k = g.rows;
    bnorm.assign(k, Rat(0));
    mu = RatMat(k, k);
    // r(i,j) = <b_i, b*_j>
    RatMat r(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Rat s = g(i, j);
            for (std::size_t t = 0; t < j; ++t) s -= mu(j, t) * r(i, t);
            r(i, j) = s;
            if (j < i) mu(i, j) = s / bnorm[j];
        }
        bnorm[i] = r(i, i);
    }
}

}  // namespace

std::vector<IntVec> lll(const RatMat& q) {
    const std::size_t k = q.rows;
    std::vector<IntVec> b(k, IntVec(k, 0));
    for (std::size_t i = 0; i < k; ++i) b[i][i] = 1;
    const Rat delta(99, 100);

    auto reduce_pass = [&](std::size_t i, const RatMat& mu) {
        // size-reduce b_i against b_{i-1}..b_0
        bool changed = false;
        for (std::size_t j = i; j-- > 0;) {
            Int c = round_rat(mu(i, j));
            if (c != 0) {
                for (std::size_t t = 0; t < k; ++t) b[i][t] -= c * b[j][t];
                changed = true;
            }
        }
        return changed;
    };

    std::size_t i = 1;
    std::size_t guard = 0;
    while (i < k) {
        if (++guard > 100000) throw std::runtime_error("lll: iteration guard tripped");
        RatMat g = gram_of(q, b);
        std::vector<Rat> bnorm;
        RatMat mu;
        gram_schmidt(g, bnorm, mu);
        if (reduce_pass(i, mu)) {
            g = gram_of(q, b);
            gram_schmidt(g, bnorm, mu);
        }
        if (bnorm[i] >= (delta - mu(i, i - 1) * mu(i, i - 1)) * bnorm[i - 1]) {
            ++i;
        } else {
            std::swap(b[i], b[i - 1]);
            i = std::max<std::size_t>(1, i - 1);
        }
    }
    return b;
}

std::vector<IntVec> enumerate_up_to(const RatMat& q, const Rat& bound) {
    if (bound <= 0) return {};
    const std::size_t k = q.rows;
    auto basis = lll(q);
    RatMat g = gram_of(q, basis);
    std::vector<Rat> bnorm_r;
    RatMat mu_r;
    gram_schmidt(g, bnorm_r, mu_r);
    std::vector<double> bnorm(k);
    std::vector<std::vector<double>> mu(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        bnorm[i] = to_double(bnorm_r[i]);
        for (std::size_t j = 0; j < i; ++j) mu[i][j] = to_double(mu_r(i, j));
    }
    const double c_bound = to_double(bound) * (1.0 + 1e-6) + 1e-12;

    std::vector<long> x(k, 0);
    std::vector<IntVec> found;
    // Depth-first over coordinates k-1 .. 0 with partial quadratic remainders.
    auto rec = [&](auto&& self, std::size_t level, double remaining) -> void {
        if (level == std::size_t(-1)) return;  // unreachable
        // center of the interval for x_level given choices above
        double center = 0;
        for (std::size_t j = level + 1; j < k; ++j) center += mu[j][level] * x[j];
        double half = std::sqrt(std::max(0.0, remaining / bnorm[level]));
        long lo = long(std::ceil(-center - half - 1e-9));
        long hi = long(std::floor(-center + half + 1e-9));
        for (long xi = lo; xi <= hi; ++xi) {
            x[level] = xi;
            double term = (xi + center) * (xi + center) * bnorm[level];
            double rem = remaining - term;
            if (rem < -1e-9) continue;
            if (level == 0) {
                bool all_zero = true;
                for (auto v : x)
                    if (v != 0) {
                        all_zero = false;
                        break;
                    }
                if (all_zero) continue;
                IntVec z(k, 0);
                for (std::size_t i = 0; i < k; ++i)
                    if (x[i] != 0)
                        for (std::size_t t = 0; t < k; ++t) z[t] += Int(x[i]) * basis[i][t];
                // canonical sign: first nonzero coordinate positive
                for (std::size_t t = 0; t < k; ++t) {
                    if (z[t] == 0) continue;
                    if (z[t] < 0)
                        for (auto& zz : z) zz = -zz;
                    break;
                }
                if (norm2(q, z) <= bound) found.push_back(std::move(z));
            } else {
                self(self, level - 1, std::max(0.0, rem));
            }
        }
        x[level] = 0;
    };
    rec(rec, k - 1, c_bound);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

IntVec shortest_vector(const RatMat& q) {
    auto basis = lll(q);
    Rat best = norm2(q, basis[0]);
    for (const auto& b : basis) best = std::min(best, norm2(q, b));
    auto cands = enumerate_up_to(q, best);
    IntVec arg;
    Rat best_found = -1;
    for (const auto& c : cands) {
        Rat n = norm2(q, c);
        if (best_found < 0 || n < best_found || (n == best_found && c < arg)) {
            best_found = n;
            arg = c;
        }
    }
    if (arg.empty()) throw std::logic_error("shortest_vector: enumeration came back empty");
    return arg;
}

std::vector<IntVec> hkz(const RatMat& q) {
    const std::size_t k = q.rows;
    if (k == 1) return {{Int(1)}};
    IntVec v1 = shortest_vector(q);
    auto b = complete_basis(v1);
    RatMat g = gram_of(q, b);
    // Gram of the projection of b_2..b_k orthogonal to b_1.
    RatMat qproj(k - 1, k - 1);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 1; j < k; ++j)
            qproj(i - 1, j - 1) = g(i, j) - g(i, 0) * g(j, 0) / g(0, 0);
    auto sub = hkz(qproj);
    std::vector<IntVec> out{v1};
    for (const auto& s : sub) {
        IntVec c(k, 0);
        for (std::size_t i = 0; i < k - 1; ++i)
            if (s[i] != 0)
                for (std::size_t t = 0; t < k; ++t) c[t] += s[i] * b[i + 1][t];
        out.push_back(std::move(c));
    }
    // Final size reduction keeps the lift short.
    RatMat gout = gram_of(q, out);
    std::vector<Rat> bnorm;
    RatMat mu;
    gram_schmidt(gout, bnorm, mu);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = i; j-- > 0;) {
            Int c = round_rat(mu(i, j));
            if (c != 0) {
                for (std::size_t t = 0; t < k; ++t) out[i][t] -= c * out[j][t];
                gout = gram_of(q, out);
                gram_schmidt(gout, bnorm, mu);
            }
        }
    return out;
}

}  // namespace avb::lattice

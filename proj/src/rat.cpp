#include "avb/rat.hpp"

#include <algorithm>
#include <numeric>

namespace avb {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

std::string format_rat(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    RatMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    RatVec out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (v[j] != 0) out[i] += m(i, j) * v[j];
    return out;
}

RatMat transpose(const RatMat& m) {
    RatMat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Rat det(RatMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    const std::size_t n = m.rows;
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows;
    RatMat w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
        w(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && w(piv, c) == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(c, j));
        Rat p = w(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) w(c, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) w(i, j) -= f * w(c, j);
        }
    }
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = w(i, n + j);
    return inv;
}

RatVec solve(const RatMat& m, const RatVec& b) { return mat_vec(inverse(m), b); }

std::size_t rank(RatMat m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::vector<RatVec> kernel(RatMat m) {
    const std::size_t nc = m.cols;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(r, j));
        Rat p = m(r, c);
        for (std::size_t j = 0; j < nc; ++j) m(r, j) /= p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < nc; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(nc);
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMat kron(const RatMat& x, const RatMat& y) {
    RatMat z(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            if (x(i, j) == 0) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    z(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
        }
    return z;
}

RatMat block_diag(const RatMat& x, const RatMat& y) {
    RatMat z(x.rows + y.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) z(x.rows + i, x.cols + j) = y(i, j);
    return z;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

RatMat compound(const RatMat& m, std::size_t r) {
    auto rows = subsets(m.rows, r), cols = subsets(m.cols, r);
    RatMat z(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            RatMat sub(r, r);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b) sub(a, b) = m(rows[i][a], cols[j][b]);
            z(i, j) = det(sub);
        }
    return z;
}

Rat dot(const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rat quad_form(const RatMat& m, const RatVec& x, const RatVec& y) {
    return dot(x, mat_vec(m, y));
}

bool is_positive_definite(const RatMat& m) {
    if (m.rows != m.cols) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m(i, j) != m(j, i)) return false;
    for (std::size_t k = 1; k <= m.rows; ++k) {
        RatMat lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
        if (det(std::move(lead)) <= 0) return false;
    }
    return true;
}

void col_hnf_transform(std::vector<IntVec>& cols, std::vector<IntVec>* u) {
    const std::size_t k = cols.size();
    const std::size_t n = k ? cols[0].size() : 0;
    if (u) {
        u->assign(k, IntVec(k, 0));
        for (std::size_t i = 0; i < k; ++i) (*u)[i][i] = 1;
    }
    std::size_t done = 0;  // number of pivot columns fixed on the left
    for (std::size_t row = 0; row < n && done < k; ++row) {
        // Euclidean elimination across columns done..k-1 in this row.
        while (true) {
            std::size_t nz = k;
            for (std::size_t c = done; c < k; ++c)
                if (cols[c][row] != 0) { nz = c; break; }
            if (nz == k) break;
            // Pick the column with the smallest nonzero |entry| as pivot.
            std::size_t piv = nz;
            for (std::size_t c = nz + 1; c < k; ++c)
                if (cols[c][row] != 0 && abs(cols[c][row]) < abs(cols[piv][row])) piv = c;
            std::swap(cols[piv], cols[done]);
            if (u) std::swap((*u)[piv], (*u)[done]);
            bool reduced = true;
            for (std::size_t c = done + 1; c < k; ++c) {
                if (cols[c][row] == 0) continue;
                Int q = cols[c][row] / cols[done][row];
                for (std::size_t i = 0; i < n; ++i) cols[c][i] -= q * cols[done][i];
                if (u)
                    for (std::size_t i = 0; i < k; ++i) (*u)[c][i] -= q * (*u)[done][i];
                if (cols[c][row] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (done < k && cols[done][row] != 0) {
            if (cols[done][row] < 0) {
                for (auto& x : cols[done]) x = -x;
                if (u)
                    for (auto& x : (*u)[done]) x = -x;
            }
            ++done;
        }
    }
}

std::vector<IntVec> hnf_basis(std::vector<IntVec> gens, std::size_t n) {
    for (auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("hnf_basis: length mismatch");
    col_hnf_transform(gens, nullptr);
    std::vector<IntVec> basis;
    for (auto& c : gens)
        if (std::any_of(c.begin(), c.end(), [](const Int& x) { return x != 0; }))
            basis.push_back(std::move(c));
    return basis;
}

std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t n) {
    // Rational linear forms vanishing on the span, cleared to integers; the
    // integer kernel of that form matrix is the saturation.
    RatMat m(n, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = Rat(gens[j][i]);
    auto forms = kernel(transpose(m));  // w with wᵀ·gens = 0
    if (forms.empty()) {
        std::vector<IntVec> id;
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            id.push_back(std::move(e));
        }
        return id;
    }
    // Clear denominators per form.
    std::vector<IntVec> wint;
    for (auto& f : forms) {
        Int lcm = 1;
        for (auto& x : f) {
            Int d = denominator(x);
            lcm = lcm / gcd(lcm, d) * d;
        }
        IntVec row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = numerator(Rat(f[j] * lcm));
        wint.push_back(std::move(row));
    }
    // Column-HNF of the n columns of W (each column has wint.size() entries).
    std::vector<IntVec> cols(n, IntVec(wint.size()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < wint.size(); ++i) cols[j][i] = wint[i][j];
    std::vector<IntVec> u;
    col_hnf_transform(cols, &u);
    std::vector<IntVec> basis;
    for (std::size_t c = 0; c < n; ++c) {
        bool zero = std::all_of(cols[c].begin(), cols[c].end(),
                                [](const Int& x) { return x == 0; });
        if (zero) basis.push_back(u[c]);
    }
    return basis;
}

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * Int(n - i) / Int(i + 1);
    return r;
}

Int factorial(std::size_t n) {
    Int r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= Int(i);
    return r;
}

}  // namespace avb

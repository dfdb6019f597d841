#include "avb/places.hpp"

#include <cmath>
#include <stdexcept>

namespace avb::places {

// Deterministic Miller–Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Place Place::finite(std::uint64_t prime) {
    if (!is_prime(prime)) throw std::invalid_argument("not a prime");
    return {Kind::Finite, prime};
}

long valuation(const Rat& x, std::uint64_t p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    Int n = numerator(x), d = denominator(x);
    Int ip(p);
    while (n % ip == 0) n /= ip, ++v;
    while (d % ip == 0) d /= ip, --v;
    return v;
}

Rat abs_value_exact(const Rat& x, const Place& v) {
    if (x == 0) throw std::domain_error("absolute value of zero");
    if (v.kind != Kind::Finite)
        throw std::invalid_argument("abs_value_exact: finite places only");
    long val = valuation(x, v.p);
    Int pw = 1;
    for (long i = 0; i < std::abs(val); ++i) pw *= Int(v.p);
    return val >= 0 ? Rat(1, pw) : Rat(pw, 1);
}

double abs_value(const Rat& x, const Place& v) {
    if (x == 0) throw std::domain_error("absolute value of zero");
    if (v.kind == Kind::Finite) return to_double(abs_value_exact(x, v));
    return std::abs(to_double(x));  // real and complex places restrict equally on Q
}

std::vector<std::uint64_t> prime_support(const Rat& x) {
    std::vector<std::uint64_t> primes;
    auto add_factors = [&](Int n) {
        if (n < 0) n = -n;
        for (std::uint64_t p = 2; Int(p) * Int(p) <= n; p += (p == 2 ? 1 : 2)) {
            if (n % Int(p) == 0) {
                primes.push_back(p);
                while (n % Int(p) == 0) n /= Int(p);
            }
        }
        if (n > 1) primes.push_back(n.convert_to<std::uint64_t>());
    };
    add_factors(numerator(x));
    add_factors(denominator(x));
    return primes;
}

bool product_formula_check(const Rat& x) {
    if (x == 0) throw std::domain_error("product formula needs nonzero input");
    Rat finite_product = 1;
    for (auto p : prime_support(x))
        finite_product *= abs_value_exact(x, Place::finite(p));
    // |x|_∞ is rational on Q, so the whole product is exact.
    return finite_product * abs(x) == 1;
}

double adelic_abs(const Idele& a) {
    Rat finite_product = 1;
    for (const auto& [p, val] : a.finite) {
        if (val <= 0) throw std::invalid_argument("idele component must be positive");
        long v = valuation(val, p);
        Rat expected = 1;
        for (long i = 0; i < std::abs(v); ++i)
            v >= 0 ? expected *= Rat(Int(p)) : expected /= Rat(Int(p));
        if (expected != val)
            throw std::invalid_argument("idele finite component is not a power of its prime");
        finite_product *= val;
    }
    return to_double(finite_product) * a.arch;
}

}  // namespace avb::places

#ifndef ORTHINV_FIELDS_HPP
#define ORTHINV_FIELDS_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "orthinv/errors.hpp"

namespace orthinv {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Odd prime field descriptor. Construction validates the modulus.
struct PrimeField {
    std::uint32_t p;
    explicit PrimeField(std::uint32_t p_) : p(p_) {
        if (p < 3 || !is_prime(p) || p % 2 == 0)
            throw NotPrime("p must be an odd prime, got " + std::to_string(p));
    }
};

// Residue arithmetic in F_p. Values are canonical representatives in [0, p).
inline std::uint32_t fp_reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw ZeroInverse();
    return fp_pow(a, p - 2, p);
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline std::uint32_t element_order(std::uint32_t a, std::uint32_t p) {
    std::uint32_t ord = 1, x = a % p;
    while (x != 1) {
        x = fp_mul(x, a, p);
        ++ord;
        if (ord > p) throw Error("order computation ran away");
    }
    return ord;
}

/// Smallest generator of F_p^x.
inline std::uint32_t primitive_root(std::uint32_t p) {
    PrimeField check(p);
    auto fs = prime_factors(p - 1);
    for (std::uint32_t a = 2; a < p; ++a) {
        bool ok = true;
        for (auto q : fs)
            if (fp_pow(a, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return a;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

/// Non-square used for the minus-type quadratic form:
/// -1 when p = 3 (mod 4), otherwise the smallest generator of F_p^x.
inline std::uint32_t select_lambda(std::uint32_t p) {
    PrimeField check(p);
    std::uint32_t lam = (p % 4 == 3) ? p - 1 : primitive_root(p);
    if (fp_pow(lam, (p - 1) / 2, p) != p - 1)
        throw Error("lambda is not a non-square");
    return lam;
}

// ---------------------------------------------------------------------------
// Extension fields F_{p^e}, represented by coefficient vectors modulo a monic
// irreducible polynomial. Only desk-scale orders are needed (p^e < 2^32).

using ExtElem = std::vector<std::uint32_t>;  // length e, low coefficient first

namespace detail {

// Dense F_p[t] helpers on low-first coefficient vectors without trailing zeros.
inline void fpx_trim(std::vector<std::uint32_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<std::uint32_t> fpx_rem(std::vector<std::uint32_t> r,
                                          const std::vector<std::uint32_t>& d,
                                          std::uint32_t p) {
    std::uint32_t lead_inv = fp_inv(d.back(), p);
    while (r.size() >= d.size() && !r.empty()) {
        std::uint32_t c = fp_mul(r.back(), lead_inv, p);
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i)
            r[shift + i] = fp_sub(r[shift + i], fp_mul(c, d[i], p), p);
        fpx_trim(r);
    }
    return r;
}

inline bool fpx_divides(const std::vector<std::uint32_t>& d,
                        const std::vector<std::uint32_t>& f,
                        std::uint32_t p) {
    return fpx_rem(f, d, p).empty();
}

// Irreducibility by trial division against every monic polynomial of degree
// up to deg(f)/2. Fine at the field sizes this project uses.
inline bool fpx_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::size_t e = f.size() - 1;
    for (std::size_t k = 1; 2 * k <= e; ++k) {
        std::vector<std::uint32_t> d(k + 1, 0);
        d[k] = 1;
        while (true) {
            if (fpx_divides(d, f, p)) return false;
            // next candidate: increment lower coefficients in base p
            std::size_t i = 0;
            while (i < k && d[i] == p - 1) { d[i] = 0; ++i; }
            if (i == k) break;
            ++d[i];
        }
    }
    return true;
}

} // namespace detail

struct ExtensionField {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::vector<std::uint32_t> modulus;  // monic, size e+1

    std::uint64_t order() const {
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) q *= p;
        return q;
    }

    /// e=1: F_p itself. e=2: t^2 - lambda with lambda = select_lambda(p).
    /// e>=3: the lexicographically smallest irreducible monic polynomial
    /// (coefficients compared constant term first).
    static ExtensionField make(std::uint32_t p, std::uint32_t e) {
        PrimeField check(p);
        if (e == 0) throw Error("extension degree must be >= 1");
        ExtensionField F;
        F.p = p;
        F.e = e;
        if (e == 1) {
            F.modulus = {0, 1};
            return F;
        }
        if (e == 2) {
            F.modulus = {fp_neg(select_lambda(p), p), 0, 1};
            if (!detail::fpx_irreducible(F.modulus, p))
                throw Error("t^2 - lambda unexpectedly reducible");
            return F;
        }
        std::vector<std::uint32_t> f(e + 1, 0);
        f[e] = 1;
        while (true) {
            if (f[0] != 0 && detail::fpx_irreducible(f, p)) {
                F.modulus = f;
                return F;
            }
            std::size_t i = 0;
            while (i < e && f[i] == p - 1) { f[i] = 0; ++i; }
            if (i == e) throw Error("no irreducible modulus found");
            ++f[i];
        }
    }
};

inline ExtElem ext_zero(const ExtensionField& F) { return ExtElem(F.e, 0); }

inline ExtElem ext_embed(const ExtensionField& F, std::uint32_t a) {
    ExtElem r(F.e, 0);
    r[0] = a % F.p;
    return r;
}

inline bool ext_is_zero(const ExtElem& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

inline ExtElem ext_add(const ExtensionField& F, const ExtElem& a, const ExtElem& b) {
    ExtElem r(F.e);
    for (std::uint32_t i = 0; i < F.e; ++i) r[i] = fp_add(a[i], b[i], F.p);
    return r;
}

inline ExtElem ext_sub(const ExtensionField& F, const ExtElem& a, const ExtElem& b) {
    ExtElem r(F.e);
    for (std::uint32_t i = 0; i < F.e; ++i) r[i] = fp_sub(a[i], b[i], F.p);
    return r;
}

inline ExtElem ext_mul(const ExtensionField& F, const ExtElem& a, const ExtElem& b) {
    if (F.e == 1) return {fp_mul(a[0], b[0], F.p)};
    std::vector<std::uint64_t> conv(2 * F.e - 1, 0);
    for (std::uint32_t i = 0; i < F.e; ++i) {
        if (!a[i]) continue;
        for (std::uint32_t j = 0; j < F.e; ++j)
            conv[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
    std::vector<std::uint32_t> c(conv.size());
    for (std::size_t i = 0; i < conv.size(); ++i)
        c[i] = static_cast<std::uint32_t>(conv[i] % F.p);
    // reduce modulo the monic modulus
    for (std::size_t i = c.size(); i-- > F.e;) {
        std::uint32_t coef = c[i];
        if (!coef) continue;
        c[i] = 0;
        for (std::uint32_t k = 0; k < F.e; ++k)
            c[i - F.e + k] = fp_sub(c[i - F.e + k], fp_mul(coef, F.modulus[k], F.p), F.p);
    }
    c.resize(F.e);
    return c;
}

inline ExtElem ext_pow(const ExtensionField& F, ExtElem a, std::uint64_t n) {
    ExtElem r = ext_embed(F, 1);
    while (n) {
        if (n & 1) r = ext_mul(F, r, a);
        a = ext_mul(F, a, a);
        n >>= 1;
    }
    return r;
}

inline ExtElem ext_inv(const ExtensionField& F, const ExtElem& a) {
    if (ext_is_zero(a)) throw ZeroInverse();
    return ext_pow(F, a, F.order() - 2);
}

/// Deterministic seeded generator; bounded draws use rejection so the
/// distribution is exactly uniform.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t v;
        do { v = eng(); } while (v >= limit);
        return v % n;
    }
};

inline ExtElem random_ext_element(const ExtensionField& F, Rng& rng) {
    ExtElem r(F.e);
    for (std::uint32_t i = 0; i < F.e; ++i)
        r[i] = static_cast<std::uint32_t>(rng.below(F.p));
    return r;
}

} // namespace orthinv

#endif

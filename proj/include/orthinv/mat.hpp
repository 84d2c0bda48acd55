#ifndef ORTHINV_MAT_HPP
#define ORTHINV_MAT_HPP

#include <array>
#include <cstdint>
#include <string>

#include "orthinv/errors.hpp"
#include "orthinv/fields.hpp"

namespace orthinv {

/// 2x2 matrix over F_p, row-major.
struct Mat2 {
    std::uint32_t p = 0;
    std::array<std::uint32_t, 4> a{};  // [a00, a01, a10, a11]

    static Mat2 identity(std::uint32_t p) { return {p, {1, 0, 0, 1}}; }

    std::uint32_t det() const {
        return fp_sub(fp_mul(a[0], a[3], p), fp_mul(a[1], a[2], p), p);
    }

    bool is_diagonal() const { return a[1] == 0 && a[2] == 0; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend auto operator<=>(const Mat2& x, const Mat2& y) { return x.a <=> y.a; }
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    if (x.p != y.p) throw FieldMismatch();
    std::uint32_t p = x.p;
    return {p,
            {fp_add(fp_mul(x.a[0], y.a[0], p), fp_mul(x.a[1], y.a[2], p), p),
             fp_add(fp_mul(x.a[0], y.a[1], p), fp_mul(x.a[1], y.a[3], p), p),
             fp_add(fp_mul(x.a[2], y.a[0], p), fp_mul(x.a[3], y.a[2], p), p),
             fp_add(fp_mul(x.a[2], y.a[1], p), fp_mul(x.a[3], y.a[3], p), p)}};
}

inline Mat2 transpose(const Mat2& x) { return {x.p, {x.a[0], x.a[2], x.a[1], x.a[3]}}; }

inline Mat2 inverse(const Mat2& x) {
    std::uint32_t d = x.det();
    if (d == 0) throw SingularMatrix();
    std::uint32_t di = fp_inv(d, x.p), p = x.p;
    return {p,
            {fp_mul(x.a[3], di, p), fp_mul(fp_neg(x.a[1], p), di, p),
             fp_mul(fp_neg(x.a[2], p), di, p), fp_mul(x.a[0], di, p)}};
}

inline std::uint32_t matrix_order(const Mat2& x) {
    Mat2 id = Mat2::identity(x.p), m = x;
    std::uint32_t ord = 1;
    while (!(m == id)) {
        m = mul(m, x);
        ++ord;
        if (ord > x.p * x.p * x.p * x.p) throw Error("matrix order ran away");
    }
    return ord;
}

/// Row-major integer list form, e.g. [[0,1],[1,0]].
inline std::string to_text(const Mat2& m) {
    return "[[" + std::to_string(m.a[0]) + "," + std::to_string(m.a[1]) + "],[" +
           std::to_string(m.a[2]) + "," + std::to_string(m.a[3]) + "]]";
}

/// 4x4 matrix over F_p acting on the variable vector (x1, x2, y1, y2).
struct Mat4 {
    std::uint32_t p = 0;
    std::array<std::uint32_t, 16> a{};

    static Mat4 identity(std::uint32_t p) {
        Mat4 m;
        m.p = p;
        for (int i = 0; i < 4; ++i) m.a[i * 4 + i] = 1;
        return m;
    }

    std::uint32_t at(int i, int j) const { return a[i * 4 + j]; }
    void set(int i, int j, std::uint32_t v) { a[i * 4 + j] = v; }

    bool is_diagonal() const {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j && at(i, j) != 0) return false;
        return true;
    }

    friend bool operator==(const Mat4&, const Mat4&) = default;
};

inline Mat4 mul(const Mat4& x, const Mat4& y) {
    if (x.p != y.p) throw FieldMismatch();
    Mat4 r;
    r.p = x.p;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::uint64_t s = 0;
            for (int k = 0; k < 4; ++k)
                s += static_cast<std::uint64_t>(x.at(i, k)) * y.at(k, j);
            r.set(i, j, static_cast<std::uint32_t>(s % x.p));
        }
    return r;
}

inline std::uint32_t det(const Mat4& m) {
    std::array<std::uint32_t, 16> w = m.a;
    std::uint32_t p = m.p, d = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (w[r * 4 + c]) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < 4; ++j) std::swap(w[piv * 4 + j], w[c * 4 + j]);
            d = fp_neg(d, p);
        }
        d = fp_mul(d, w[c * 4 + c], p);
        std::uint32_t inv = fp_inv(w[c * 4 + c], p);
        for (int r = c + 1; r < 4; ++r) {
            std::uint32_t f = fp_mul(w[r * 4 + c], inv, p);
            if (!f) continue;
            for (int j = c; j < 4; ++j)
                w[r * 4 + j] = fp_sub(w[r * 4 + j], fp_mul(f, w[c * 4 + j], p), p);
        }
    }
    return d;
}

} // namespace orthinv

#endif

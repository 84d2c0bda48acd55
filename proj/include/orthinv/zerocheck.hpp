#ifndef ORTHINV_ZEROCHECK_HPP
#define ORTHINV_ZEROCHECK_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orthinv/catalog.hpp"
#include "orthinv/errors.hpp"
#include "orthinv/fields.hpp"
#include "orthinv/invariant.hpp"
#include "orthinv/matgroups.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

/// (2p+2) x (2p+2) grid of coset translates g_i(f_j). Row 0 is the identity
/// pair, so row 0 reproduces the f_j themselves.
struct CovariantMatrix {
    std::uint32_t p = 0;
    std::uint32_t lambda = 0;
    std::size_t n = 0;
    std::vector<std::vector<Polynomial>> entries;  // entries[i][j] = act(g_i, f_j)
    std::vector<std::uint32_t> column_degrees;     // deg f_j
};

struct ZeroTestVerdict {
    bool nonzero = false;
    std::uint32_t trials = 0;
    std::uint32_t extension_degree = 0;
    std::uint64_t field_order = 0;
    std::uint32_t degree_bound = 0;
    std::string failure_bound;  // "(degbound/q)^trials" when the verdict is zero
    std::optional<std::array<std::vector<std::uint32_t>, 4>> witness;
};

inline CovariantMatrix build_covariant_matrix(std::uint32_t p,
                                              std::optional<std::uint32_t> lambda_opt = std::nullopt) {
    std::uint32_t lam = lambda_opt.value_or(select_lambda(p));
    MatrixGroup G = orthogonal_group(p, OrthType::Minus, lam);
    NamedFamily basis = covariant_basis(p, lam, &G);
    std::vector<ProductElement> reps = coset_representatives_product_diagonal(G);
    CovariantMatrix M;
    M.p = p;
    M.lambda = lam;
    M.n = basis.members.size();
    for (const auto& [label, f] : basis.members) M.column_degrees.push_back(f.degree());
    for (const auto& g : reps) {
        Mat4 A = action_matrix(g);
        std::vector<Polynomial> row;
        row.reserve(M.n);
        for (const auto& [label, f] : basis.members) row.push_back(substitute_linear(f, A));
        M.entries.push_back(std::move(row));
    }
    if (M.entries.size() != M.n) throw Error("covariant matrix is not square");
    return M;
}

namespace detail {

/// Determinant over F_{p^e} by fraction-free-less plain elimination with
/// field inverses.
inline ExtElem ext_det(const ExtensionField& F, std::vector<std::vector<ExtElem>> m) {
    std::size_t n = m.size();
    ExtElem det = ext_embed(F, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (!ext_is_zero(m[r][c])) { piv = r; break; }
        if (piv == n) return ext_zero(F);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = ext_sub(F, ext_zero(F), det);
        }
        det = ext_mul(F, det, m[c][c]);
        ExtElem inv = ext_inv(F, m[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (ext_is_zero(m[r][c])) continue;
            ExtElem factor = ext_mul(F, m[r][c], inv);
            for (std::size_t j = c; j < n; ++j)
                m[r][j] = ext_sub(F, m[r][j], ext_mul(F, factor, m[c][j]));
        }
    }
    return det;
}

} // namespace detail

/// Schwartz-Zippel certification that det M is a nonzero polynomial. A
/// nonzero evaluation is an exact certificate; a run of zero evaluations
/// only bounds the failure probability.
inline ZeroTestVerdict det_nonzero(const CovariantMatrix& M, std::uint64_t seed,
                                   std::uint32_t trials) {
    if (trials < 1) throw Error("trials must be >= 1");
    std::uint32_t degbound = 0;
    for (auto d : M.column_degrees) degbound += d;
    std::uint32_t e = 1;
    std::uint64_t q = M.p;
    while (q < 100ull * degbound) { q *= M.p; ++e; }
    ExtensionField F = ExtensionField::make(M.p, e);
    Rng rng(seed);
    ZeroTestVerdict v;
    v.trials = trials;
    v.extension_degree = e;
    v.field_order = q;
    v.degree_bound = degbound;
    for (std::uint32_t t = 0; t < trials; ++t) {
        std::array<ExtElem, 4> pt;
        for (auto& z : pt) z = random_ext_element(F, rng);
        std::vector<std::vector<ExtElem>> vals(M.n);
        for (std::size_t i = 0; i < M.n; ++i) {
            vals[i].reserve(M.n);
            for (std::size_t j = 0; j < M.n; ++j)
                vals[i].push_back(evaluate(M.entries[i][j], F, pt));
        }
        if (!ext_is_zero(detail::ext_det(F, std::move(vals)))) {
            v.nonzero = true;
            v.witness = {pt[0], pt[1], pt[2], pt[3]};
            return v;
        }
    }
    v.nonzero = false;
    v.failure_bound = "(" + std::to_string(degbound) + "/" + std::to_string(q) + ")^" +
                      std::to_string(trials);
    return v;
}

/// Exact determinant of a polynomial matrix by minor expansion memoized on
/// the active column set. Fine up to 8x8; callers guard larger sizes.
inline Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m, std::uint32_t p) {
    std::size_t n = m.size();
    if (n > 12) throw PrimeTooLargeForExact("exact determinant limited to 12x12");
    std::unordered_map<std::uint32_t, Polynomial> memo;
    std::function<Polynomial(std::size_t, std::uint32_t)> minor =
        [&](std::size_t row, std::uint32_t cols) -> Polynomial {
        if (row == n) return Polynomial::constant(p, 1);
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        Polynomial acc(p);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!((cols >> c) & 1u)) continue;  // sign alternates over active columns only
            if (!m[row][c].is_zero()) {
                Polynomial sub = minor(row + 1, cols & ~(1u << c));
                Polynomial term = m[row][c] * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(0, (n >= 32) ? 0xffffffffu : ((1u << n) - 1u));
}

/// Exact symbolic determinant of the full covariant matrix. Feasible at
/// p = 3 (8x8, entries of degree <= 8); guarded off for larger primes.
inline Polynomial exact_matrix_det(const CovariantMatrix& M) {
    if (M.p != 3) throw PrimeTooLargeForExact("exact symbolic determinant implemented for p = 3");
    return poly_matrix_det(M.entries, M.p);
}

/// Determinant of the matrix of leading terms under lex x1 > y1 > x2 > y2.
/// Exact route reserved for p = 3 (8x8).
///
/// Caution: this determinant is identically zero. The representative list
/// contains both (-1, 1) (the rotation of order two) and (eta, 1), and since
/// every basis member's leading monomial has x2-exponent zero, those two rows
/// of the leading-term matrix coincide. Singularity of the leading-term
/// matrix says nothing about the full determinant, which exact_matrix_det
/// and det_nonzero confirm to be nonzero.
inline Polynomial leading_term_matrix_det(const CovariantMatrix& M, Order order = Order::Lex) {
    if (M.p != 3) throw PrimeTooLargeForExact("leading-term determinant implemented for p = 3");
    std::vector<std::vector<Polynomial>> lt(M.n, std::vector<Polynomial>());
    for (std::size_t i = 0; i < M.n; ++i)
        for (std::size_t j = 0; j < M.n; ++j) {
            const Polynomial& f = M.entries[i][j];
            if (f.is_zero()) {
                lt[i].push_back(Polynomial(M.p));
            } else {
                auto [mono, coef] = f.leading_term(order);
                lt[i].push_back(Polynomial::from_term(M.p, mono, coef));
            }
        }
    return poly_matrix_det(lt, M.p);
}

} // namespace orthinv

#endif

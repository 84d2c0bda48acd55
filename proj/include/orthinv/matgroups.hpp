#ifndef ORTHINV_MATGROUPS_HPP
#define ORTHINV_MATGROUPS_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orthinv/errors.hpp"
#include "orthinv/fields.hpp"
#include "orthinv/mat.hpp"

namespace orthinv {

enum class GroupLabel { SO2plus, O2plus, O2minus, GL2, Custom };

inline const char* to_string(GroupLabel l) {
    switch (l) {
        case GroupLabel::SO2plus: return "SO2plus";
        case GroupLabel::O2plus: return "O2plus";
        case GroupLabel::O2minus: return "O2minus";
        case GroupLabel::GL2: return "GL2";
        default: return "custom";
    }
}

/// Enumerated finite subgroup of GL_2(F_p). Elements are kept sorted by
/// their row-major serialization; generators keep construction order.
struct MatrixGroup {
    std::uint32_t p = 0;
    GroupLabel label = GroupLabel::Custom;
    std::vector<Mat2> elements;    // sorted, deduplicated
    std::vector<Mat2> generators;
    std::optional<std::uint32_t> lambda;  // minus type only
    bool bruteforce_fallback = false;     // minus-type generator search exhausted

    std::size_t order() const { return elements.size(); }

    bool contains(const Mat2& g) const {
        return std::binary_search(elements.begin(), elements.end(), g,
                                  [](const Mat2& a, const Mat2& b) { return a.a < b.a; });
    }
};

inline constexpr std::size_t kClosureBudget = 1'000'000;

inline MatrixGroup closure(const std::vector<Mat2>& generators, std::uint32_t p) {
    PrimeField check(p);
    for (const auto& g : generators)
        if (g.det() == 0) throw SingularGenerator();
    std::set<std::array<std::uint32_t, 4>> seen;
    std::deque<Mat2> queue;
    Mat2 id = Mat2::identity(p);
    seen.insert(id.a);
    queue.push_back(id);
    while (!queue.empty()) {
        Mat2 cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Mat2 nxt = mul(cur, g);
            if (seen.insert(nxt.a).second) {
                if (seen.size() > kClosureBudget) throw ClosureBudgetExceeded();
                queue.push_back(nxt);
            }
        }
    }
    MatrixGroup G;
    G.p = p;
    G.generators = generators;
    for (const auto& a : seen) G.elements.push_back({p, a});
    return G;
}

enum class OrthType { Plus, Minus };

/// All g in GL_2(F_p) whose polynomial action fixes the quadratic form with
/// Gram matrix D, i.e. g * D * g^T = D under the substitution convention of
/// substitute_linear. Independent oracle for orthogonal_group.
inline MatrixGroup stabilizer_bruteforce(std::uint32_t p, const Mat2& D) {
    PrimeField check(p);
    if (p > 13) throw PrimeTooLarge("stabilizer_bruteforce requires p <= 13");
    if (D.det() == 0) throw SingularMatrix();
    MatrixGroup G;
    G.p = p;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    Mat2 g{p, {a, b, c, d}};
                    if (g.det() == 0) continue;
                    if (mul(mul(g, D), transpose(g)) == D) G.elements.push_back(g);
                }
    std::sort(G.elements.begin(), G.elements.end(),
              [](const Mat2& x, const Mat2& y) { return x.a < y.a; });
    return G;
}

/// xi = (0 1; 1 0), the plus-type reflection.
inline Mat2 xi_matrix(std::uint32_t p) { return {p, {0, 1, 1, 0}}; }

/// tau_a = (a 0; 0 a^-1) with a the smallest primitive root.
inline Mat2 tau_matrix(std::uint32_t p, std::uint32_t a) {
    return {p, {a % p, 0, 0, fp_inv(a, p)}};
}

/// eta = (-1 0; 0 1), the minus-type reflection.
inline Mat2 eta_matrix(std::uint32_t p) { return {p, {p - 1, 0, 0, 1}}; }

/// Constructs O_2^+ (closure of xi, tau_a) or O_2^- (closure of eta and a
/// rotation (a, b/lambda; b, a) with a^2 - b^2/lambda = 1 of multiplicative
/// order p+1, found by lexicographic search over (a, b)). When the search is
/// exhausted the group falls back to the brute-force stabilizer and the
/// fallback is flagged (only happens at p = 3, where no pair with a, b != 0
/// exists).
inline MatrixGroup orthogonal_group(std::uint32_t p, OrthType type,
                                    std::optional<std::uint32_t> lambda_opt = std::nullopt) {
    PrimeField check(p);
    if (type == OrthType::Plus) {
        std::uint32_t a = primitive_root(p);
        MatrixGroup G = closure({xi_matrix(p), tau_matrix(p, a)}, p);
        G.label = GroupLabel::O2plus;
        if (G.order() != 2 * (p - 1)) throw Error("unexpected O2+ order");
        return G;
    }
    std::uint32_t lam = lambda_opt.value_or(select_lambda(p));
    std::uint32_t lam_inv = fp_inv(lam, p);
    Mat2 eta = eta_matrix(p);
    for (std::uint32_t a = 1; a < p; ++a) {
        for (std::uint32_t b = 1; b < p; ++b) {
            // a^2 - lambda^{-1} b^2 = 1 (specializes to a^2 + b^2 = 1 for lambda = -1)
            if (fp_sub(fp_mul(a, a, p), fp_mul(lam_inv, fp_mul(b, b, p), p), p) != 1)
                continue;
            Mat2 sigma{p, {a, fp_mul(lam_inv, b, p), b, a}};
            if (matrix_order(sigma) != p + 1) continue;
            MatrixGroup G = closure({eta, sigma}, p);
            G.label = GroupLabel::O2minus;
            G.lambda = lam;
            if (G.order() != 2 * (p + 1)) throw Error("unexpected O2- order");
            return G;
        }
    }
    // search exhausted: reportable anomaly, recover through the oracle
    if (p > 13)
        throw NoGeneratorFound("no (a,b) pair yields a rotation of order p+1 at p=" +
                               std::to_string(p));
    Mat2 D{p, {1, 0, 0, fp_neg(lam, p)}};
    MatrixGroup G = stabilizer_bruteforce(p, D);
    std::optional<Mat2> sigma;
    for (const auto& g : G.elements)
        if (g.det() == 1 && matrix_order(g) == p + 1) { sigma = g; break; }
    if (!sigma) throw NoGeneratorFound("brute-force fallback found no rotation of order p+1");
    G.label = GroupLabel::O2minus;
    G.lambda = lam;
    G.generators = {eta, *sigma};
    G.bruteforce_fallback = true;
    if (G.order() != 2 * (p + 1)) throw Error("unexpected O2- order");
    return G;
}

/// Determinant-one subgroup.
inline MatrixGroup special_subgroup(const MatrixGroup& G) {
    MatrixGroup S;
    S.p = G.p;
    S.lambda = G.lambda;
    for (const auto& g : G.elements)
        if (g.det() == 1) S.elements.push_back(g);
    if (G.label == GroupLabel::O2plus) {
        S.label = GroupLabel::SO2plus;
        for (const auto& g : G.generators)
            if (g.det() == 1) S.generators.push_back(g);
    } else {
        for (const auto& g : G.generators)
            if (g.det() == 1) S.generators.push_back(g);
        if (S.generators.empty()) S.generators = S.elements;
    }
    return S;
}

/// One representative per left coset gH. The O2+/SO2+ pair returns the
/// classical {I, xi}; otherwise greedy first-unseen-coset, identity first.
inline std::vector<Mat2> coset_representatives(const MatrixGroup& G, const MatrixGroup& H) {
    if (G.p != H.p) throw FieldMismatch();
    for (const auto& h : H.elements)
        if (!G.contains(h)) throw NotASubgroup();
    if (H.order() == 0 || G.order() % H.order() != 0) throw NotASubgroup();
    if (G.label == GroupLabel::O2plus && H.label == GroupLabel::SO2plus)
        return {Mat2::identity(G.p), xi_matrix(G.p)};
    std::vector<Mat2> reps;
    std::set<std::array<std::uint32_t, 4>> covered;
    std::vector<Mat2> scan;
    scan.push_back(Mat2::identity(G.p));
    scan.insert(scan.end(), G.elements.begin(), G.elements.end());
    for (const auto& g : scan) {
        if (covered.count(g.a)) continue;
        reps.push_back(g);
        for (const auto& h : H.elements) covered.insert(mul(g, h).a);
    }
    if (reps.size() != G.order() / H.order()) throw Error("coset enumeration mismatch");
    return reps;
}

/// Pair of elements of the same underlying group; the product group
/// O2- x O2- is always iterated by pairs, never materialized.
struct ProductElement {
    Mat2 g1, g2;
};

/// Action of g on (x1, x2, y1, y2): block-diag(g, (g^T)^-1).
inline Mat4 action_matrix(const Mat2& g) {
    if (g.det() == 0) throw SingularMatrix();
    Mat2 dual = inverse(transpose(g));
    Mat4 A;
    A.p = g.p;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            A.set(i, j, g.a[i * 2 + j]);
            A.set(2 + i, 2 + j, dual.a[i * 2 + j]);
        }
    return A;
}

/// Action of (g1, g2): g1 on the x-block, (g2^T)^-1 on the y-block.
inline Mat4 action_matrix(const ProductElement& g) {
    if (g.g1.p != g.g2.p) throw FieldMismatch();
    if (g.g1.det() == 0 || g.g2.det() == 0) throw SingularMatrix();
    Mat2 dual = inverse(transpose(g.g2));
    Mat4 A;
    A.p = g.g1.p;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            A.set(i, j, g.g1.a[i * 2 + j]);
            A.set(2 + i, 2 + j, dual.a[i * 2 + j]);
        }
    return A;
}

/// Representatives of (O2- x O2-) / diagonal(O2-) in the order
/// (sigma^i, 1), i = 0..p, then (eta sigma^i, 1), i = 0..p.
inline std::vector<ProductElement> coset_representatives_product_diagonal(const MatrixGroup& Gminus) {
    if (Gminus.label != GroupLabel::O2minus || Gminus.generators.size() != 2)
        throw Error("expected a minus-type group with generators {eta, sigma}");
    std::uint32_t p = Gminus.p;
    const Mat2& eta = Gminus.generators[0];
    const Mat2& sigma = Gminus.generators[1];
    Mat2 id = Mat2::identity(p);
    std::vector<ProductElement> reps;
    Mat2 rot = id;
    for (std::uint32_t i = 0; i <= p; ++i) {
        reps.push_back({rot, id});
        rot = mul(sigma, rot);
    }
    rot = id;
    for (std::uint32_t i = 0; i <= p; ++i) {
        reps.push_back({mul(eta, rot), id});
        rot = mul(sigma, rot);
    }
    return reps;
}

} // namespace orthinv

#endif

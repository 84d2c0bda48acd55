#ifndef ORTHINV_INVARIANT_HPP
#define ORTHINV_INVARIANT_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "orthinv/errors.hpp"
#include "orthinv/linalg.hpp"
#include "orthinv/matgroups.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

inline Polynomial act(const Mat4& A, const Polynomial& f) { return substitute_linear(f, A); }
inline Polynomial act(const Mat2& g, const Polynomial& f) {
    return substitute_linear(f, action_matrix(g));
}
inline Polynomial act(const ProductElement& g, const Polynomial& f) {
    return substitute_linear(f, action_matrix(g));
}

/// A finite group's polynomial action, preprocessed for per-degree linear
/// algebra. Diagonal action matrices found in the group act on monomials by
/// scalars, so they become cheap filters; the remaining generators go through
/// null-space elimination.
struct GroupAction {
    std::uint32_t p = 0;
    std::vector<std::array<std::uint32_t, 4>> diag_actions;  // diagonal entries
    std::vector<Mat4> gen_actions;                           // non-diagonal generators
    std::vector<Mat4> element_actions;  // all elements; empty for product groups

    static GroupAction single(const MatrixGroup& G) {
        GroupAction ga;
        ga.p = G.p;
        for (const auto& g : G.elements) {
            Mat4 A = action_matrix(g);
            ga.element_actions.push_back(A);
            if (A.is_diagonal())
                ga.diag_actions.push_back({A.at(0, 0), A.at(1, 1), A.at(2, 2), A.at(3, 3)});
        }
        for (const auto& g : G.generators) {
            Mat4 A = action_matrix(g);
            if (!A.is_diagonal()) ga.gen_actions.push_back(A);
        }
        if (G.generators.empty())  // brute-force groups carry no generator list
            for (const auto& g : G.elements) {
                Mat4 A = action_matrix(g);
                if (!A.is_diagonal()) ga.gen_actions.push_back(A);
            }
        return ga;
    }

    static GroupAction product(const MatrixGroup& G1, const MatrixGroup& G2) {
        if (G1.p != G2.p) throw FieldMismatch();
        GroupAction ga;
        ga.p = G1.p;
        Mat2 id = Mat2::identity(G1.p);
        auto add_factor = [&](const MatrixGroup& G, bool first) {
            for (const auto& g : G.elements) {
                ProductElement pe = first ? ProductElement{g, id} : ProductElement{id, g};
                Mat4 A = action_matrix(pe);
                if (A.is_diagonal())
                    ga.diag_actions.push_back({A.at(0, 0), A.at(1, 1), A.at(2, 2), A.at(3, 3)});
            }
            const auto& gens = G.generators.empty() ? G.elements : G.generators;
            for (const auto& g : gens) {
                ProductElement pe = first ? ProductElement{g, id} : ProductElement{id, g};
                Mat4 A = action_matrix(pe);
                if (!A.is_diagonal()) ga.gen_actions.push_back(A);
            }
        };
        add_factor(G1, true);
        add_factor(G2, false);
        return ga;
    }

    bool fixes(const Polynomial& f) const {
        for (const auto& A : gen_actions)
            if (!(act(A, f) == f)) return false;
        for (const auto& d : diag_actions) {
            Mat4 A = Mat4::identity(p);
            for (int i = 0; i < 4; ++i) A.set(i, i, d[i]);
            if (!(act(A, f) == f)) return false;
        }
        return true;
    }
};

/// Group-average projection onto invariants. Requires |G| invertible mod p.
inline Polynomial reynolds(const MatrixGroup& G, const Polynomial& f) {
    if (G.p != f.prime()) throw FieldMismatch();
    if (G.order() % G.p == 0) throw ModularOrder();
    Polynomial acc(G.p);
    for (const auto& g : G.elements) acc = acc + act(g, f);
    return acc.scalar_mul(fp_inv(static_cast<std::uint32_t>(G.order() % G.p), G.p));
}

/// Coset-average map from H-invariants into G-invariants.
inline Polynomial relative_reynolds(const MatrixGroup& G, const MatrixGroup& H,
                                    const Polynomial& f) {
    if (G.p != f.prime()) throw FieldMismatch();
    for (const auto& h : (H.generators.empty() ? H.elements : H.generators))
        if (!(act(h, f) == f)) throw NotHInvariant();
    auto reps = coset_representatives(G, H);
    if (reps.size() % G.p == 0) throw ModularIndex();
    Polynomial acc(G.p);
    for (const auto& r : reps) acc = acc + act(r, f);
    return acc.scalar_mul(fp_inv(static_cast<std::uint32_t>(reps.size() % G.p), G.p));
}

/// Division-free orbit sum (trace map).
inline Polynomial transfer(const MatrixGroup& G, const Polynomial& f) {
    if (G.p != f.prime()) throw FieldMismatch();
    Polynomial acc(G.p);
    for (const auto& g : G.elements) acc = acc + act(g, f);
    return acc;
}

/// Basis of the degree-d homogeneous invariants, as reduced echelon rows over
/// the grlex monomial frame. Fixed-by-generators suffices for the whole group.
inline std::vector<Polynomial> fixed_space(const GroupAction& ga, std::uint32_t d,
                                           VarMask mask = VarMask::All) {
    DegreeFrame frame(d, mask);
    std::uint32_t p = ga.p;

    // scalar filters from diagonal actions: keep monomials every diagonal fixes
    std::vector<Monomial> kept;
    for (const auto& m : frame.monomials()) {
        bool ok = true;
        for (const auto& diag : ga.diag_actions) {
            std::uint32_t c = 1;
            for (int j = 0; j < 4; ++j)
                if (m.e[j]) c = fp_mul(c, fp_pow(diag[j], m.e[j], p), p);
            if (c != 1) { ok = false; break; }
        }
        if (ok) kept.push_back(m);
    }
    std::vector<Polynomial> basis;
    basis.reserve(kept.size());
    for (const auto& m : kept) basis.push_back(Polynomial::from_term(p, m, 1));

    for (const auto& A : ga.gen_actions) {
        if (basis.empty()) break;
        std::vector<std::vector<std::uint32_t>> rows;
        rows.reserve(basis.size());
        for (const auto& f : basis) rows.push_back(frame.row_of(act(A, f) - f));
        auto combos = nullspace_combinations(std::move(rows), frame.size(), p);
        std::vector<Polynomial> next;
        next.reserve(combos.size());
        for (const auto& c : combos) {
            Polynomial f(p);
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (c[i]) f = f + basis[i].scalar_mul(c[i]);
            next.push_back(std::move(f));
        }
        basis = std::move(next);
    }

    // canonical form: reduced echelon rows, leftmost grlex pivots
    RowSpace rs(p, frame.size());
    for (const auto& f : basis) rs.insert(frame.row_of(f));
    std::vector<Polynomial> out;
    out.reserve(rs.dim());
    for (const auto& row : rs.rows()) out.push_back(frame.poly_of(row, p));
    return out;
}

inline std::vector<std::size_t> hilbert_dims(const GroupAction& ga, std::uint32_t D,
                                             VarMask mask = VarMask::All) {
    std::vector<std::size_t> dims;
    dims.reserve(D + 1);
    for (std::uint32_t d = 0; d <= D; ++d) dims.push_back(fixed_space(ga, d, mask).size());
    return dims;
}

// ---------------------------------------------------------------------------
// Integer power series in t.

struct SeriesQuotient {
    std::vector<long long> numerator;
    std::vector<long long> denominator;
    std::uint32_t truncation = 0;
    std::vector<long long> coefficients;  // length truncation + 1
};

inline std::vector<long long> poly_mul_z(const std::vector<long long>& a,
                                         const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Product of (1 - t^k) over the given degrees.
inline std::vector<long long> one_minus_tk_product(const std::vector<std::uint32_t>& degs) {
    std::vector<long long> r{1};
    for (auto k : degs) {
        std::vector<long long> f(k + 1, 0);
        f[0] = 1;
        f[k] = -1;
        r = poly_mul_z(r, f);
    }
    return r;
}

inline SeriesQuotient series_expand(std::vector<long long> numerator,
                                    std::vector<long long> denominator, std::uint32_t D) {
    if (denominator.empty() || denominator[0] == 0) throw BadDenominator();
    if (denominator[0] != 1) {  // normalize over Q only when it stays integral
        long long c = denominator[0];
        for (auto& v : denominator)
            if (v % c != 0) throw BadDenominator();
        for (auto& v : denominator) v /= c;
        for (auto& v : numerator)
            if (v % c != 0) throw BadDenominator();
        for (auto& v : numerator) v /= c;
    }
    SeriesQuotient q;
    q.numerator = numerator;
    q.denominator = denominator;
    q.truncation = D;
    q.coefficients.assign(D + 1, 0);
    for (std::uint32_t n = 0; n <= D; ++n) {
        long long v = n < numerator.size() ? numerator[n] : 0;
        for (std::uint32_t k = 1; k <= n && k < denominator.size(); ++k)
            v -= denominator[k] * q.coefficients[n - k];
        q.coefficients[n] = v;
    }
    return q;
}

/// Numerator of H_sub(t) * prod_i (1 - t^{d_i}) to degree D. When the module
/// is free these are the basis-degree counts; a negative coefficient is
/// reported, never silently accepted.
inline std::vector<long long> quotient_numerator(const std::vector<std::size_t>& small_dims,
                                                 const std::vector<std::uint32_t>& hsop_degrees,
                                                 std::uint32_t D) {
    auto den = one_minus_tk_product(hsop_degrees);
    std::vector<long long> out(D + 1, 0);
    for (std::uint32_t n = 0; n <= D && n < small_dims.size(); ++n) {
        long long v = 0;
        for (std::size_t k = 0; k < den.size() && k <= n; ++k)
            v += den[k] * static_cast<long long>(small_dims[n - k]);
        out[n] = v;
        if (v < 0)
            throw NegativeCoefficient("negative coefficient " + std::to_string(v) +
                                      " at degree " + std::to_string(n) +
                                      " (module not free up to this degree, or D too small)");
    }
    return out;
}

/// (s, r): derivative and value of the numerator polynomial at t = 1.
inline std::pair<long long, long long> s_invariant(const std::vector<long long>& numerator) {
    long long s = 0, r = 0;
    for (std::size_t k = 0; k < numerator.size(); ++k) {
        s += static_cast<long long>(k) * numerator[k];
        r += numerator[k];
    }
    return {s, r};
}

// ---------------------------------------------------------------------------
// Verification engines.

struct DegreeCheck {
    std::uint32_t degree;
    std::size_t dim_actual;    // span under test
    std::size_t dim_expected;  // invariant-space dimension
    bool ok;
};

struct GenSetReport {
    std::vector<DegreeCheck> rows;
    bool pass = true;
};

namespace detail {

struct GradedSpan {
    std::vector<DegreeFrame> frames;
    std::vector<RowSpace> spaces;
    std::vector<std::vector<Polynomial>> members;  // reduced rows as polynomials

    GradedSpan(std::uint32_t p, std::uint32_t D, VarMask mask) {
        for (std::uint32_t d = 0; d <= D; ++d) {
            frames.emplace_back(d, mask);
            spaces.emplace_back(p, frames.back().size());
            members.emplace_back();
        }
    }

    bool insert(std::uint32_t d, const Polynomial& f) {
        if (f.is_zero()) return false;
        auto row = frames[d].row_of(f);
        if (!spaces[d].insert(row)) return false;
        members[d].push_back(f);
        return true;
    }
};

} // namespace detail

/// Grows the graded subalgebra generated by gens up to degree D and compares
/// its per-degree dimensions with the invariant ring's.
inline GenSetReport verify_generating_set(const GroupAction& ga,
                                          const std::vector<std::pair<std::string, Polynomial>>& gens,
                                          std::uint32_t D, VarMask mask = VarMask::All) {
    std::uint32_t p = ga.p;
    for (const auto& [label, g] : gens)
        if (!ga.fixes(g)) throw NotInvariantGenerator(label);

    detail::GradedSpan span(p, D, mask);
    span.insert(0, Polynomial::constant(p, 1));
    for (const auto& [label, g] : gens) {
        std::uint32_t d = g.degree();
        if (!g.homogeneous()) throw NotInvariantGenerator(label + " (not homogeneous)");
        if (d <= D) span.insert(d, g);
    }

    // sweep until no degree gains dimension; only multiply fresh rows
    std::vector<std::vector<std::size_t>> done(D + 1, std::vector<std::size_t>(gens.size(), 0));
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::uint32_t d = 1; d <= D; ++d) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const Polynomial& g = gens[gi].second;
                std::uint32_t e = g.degree();
                if (e == 0 || e > d) continue;
                std::uint32_t src = d - e;
                auto& start = done[d][gi];
                const auto& pool = span.members[src];
                for (std::size_t i = start; i < pool.size(); ++i)
                    if (span.insert(d, pool[i] * g)) grew = true;
                start = pool.size();
            }
        }
    }

    GenSetReport report;
    for (std::uint32_t d = 0; d <= D; ++d) {
        std::size_t dim_inv = fixed_space(ga, d, mask).size();
        std::size_t dim_sub = span.spaces[d].dim();
        bool ok = dim_sub == dim_inv;
        report.rows.push_back({d, dim_sub, dim_inv, ok});
        if (!ok) report.pass = false;
    }
    return report;
}

struct FreeBasisCheck {
    std::uint32_t degree;
    std::size_t dim_module;
    std::size_t dim_invariants;
    long long series_coeff;
    bool ok;
};

struct FreeBasisReport {
    std::vector<FreeBasisCheck> rows;
    bool pass = true;
};

/// Checks that the f_j span the Gsmall-invariants as a module over the
/// parameter algebra generated by hsop, with the dimensions predicted by the
/// free-module Hilbert series (spanning + expected dimension => freeness up
/// to D).
inline FreeBasisReport verify_free_basis(const GroupAction& small_action,
                                         const GroupAction& big_action,
                                         const std::vector<std::pair<std::string, Polynomial>>& hsop,
                                         const std::vector<std::pair<std::string, Polynomial>>& basis,
                                         std::uint32_t D) {
    std::uint32_t p = small_action.p;
    for (const auto& [label, h] : hsop)
        if (!big_action.fixes(h)) throw NotInvariantGenerator(label);
    for (const auto& [label, f] : basis)
        if (!small_action.fixes(f)) throw NotInvariantGenerator(label);

    // expected series: (sum_j t^{deg f_j}) / prod_i (1 - t^{deg h_i})
    std::vector<long long> num(D + 1, 0);
    for (const auto& [label, f] : basis)
        if (f.degree() <= D) ++num[f.degree()];
    std::vector<std::uint32_t> hdegs;
    for (const auto& [label, h] : hsop) hdegs.push_back(h.degree());
    auto series = series_expand(num, one_minus_tk_product(hdegs), D);

    // powers of the hsop elements, extended on demand
    std::vector<std::vector<Polynomial>> hpow(hsop.size());
    for (std::size_t i = 0; i < hsop.size(); ++i) hpow[i].push_back(Polynomial::constant(p, 1));
    auto hpower = [&](std::size_t i, std::uint32_t n) -> const Polynomial& {
        while (hpow[i].size() <= n) hpow[i].push_back(hpow[i].back() * hsop[i].second);
        return hpow[i][n];
    };

    FreeBasisReport report;
    for (std::uint32_t d = 0; d <= D; ++d) {
        DegreeFrame frame(d, VarMask::All);
        RowSpace rs(p, frame.size());
        for (const auto& [label, f] : basis) {
            if (f.is_zero() || f.degree() > d) continue;
            std::uint32_t rem = d - f.degree();
            // enumerate hsop exponent tuples of weighted degree rem
            std::vector<std::uint32_t> exps(hsop.size(), 0);
            std::function<void(std::size_t, std::uint32_t, Polynomial)> rec =
                [&](std::size_t i, std::uint32_t left, Polynomial acc) {
                    if (i == hsop.size()) {
                        if (left == 0) rs.insert(frame.row_of(acc * f));
                        return;
                    }
                    for (std::uint32_t a = 0; a * hdegs[i] <= left; ++a)
                        rec(i + 1, left - a * hdegs[i], acc * hpower(i, a));
                };
            rec(0, rem, Polynomial::constant(p, 1));
        }
        std::size_t dim_inv = fixed_space(small_action, d).size();
        long long coeff = series.coefficients[d];
        bool ok = rs.dim() == dim_inv && static_cast<long long>(rs.dim()) == coeff;
        report.rows.push_back({d, rs.dim(), dim_inv, coeff, ok});
        if (!ok) report.pass = false;
    }
    return report;
}

} // namespace orthinv

#endif

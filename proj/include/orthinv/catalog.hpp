#ifndef ORTHINV_CATALOG_HPP
#define ORTHINV_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthinv/errors.hpp"
#include "orthinv/invariant.hpp"
#include "orthinv/matgroups.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

/// Ordered, labeled polynomial family.
struct NamedFamily {
    std::string name;
    std::uint32_t p = 0;
    std::optional<std::uint32_t> lambda;
    std::vector<std::pair<std::string, Polynomial>> members;
};

namespace families {

inline Polynomial mono(std::uint32_t p, std::uint32_t u, std::uint32_t v, std::uint32_t s,
                       std::uint32_t t, std::int64_t c = 1) {
    return Polynomial::from_term(p, Monomial{{u, v, s, t}}, c);
}

/// u = x1*y1 + x2*y2, the canonical pairing.
inline Polynomial pairing(std::uint32_t p) { return mono(p, 1, 0, 1, 0) + mono(p, 0, 1, 0, 1); }

} // namespace families

/// Generators of the SO2+ invariant ring: the four degree-2 monomials and the
/// two degree-(p-1) monomial families x1^{p-1-i} y2^i, x2^{p-1-i} y1^i.
inline NamedFamily set_A(std::uint32_t p) {
    PrimeField check(p);
    using families::mono;
    NamedFamily F{"A", p, std::nullopt, {}};
    F.members.emplace_back("A.x1x2", mono(p, 1, 1, 0, 0));
    F.members.emplace_back("A.y1y2", mono(p, 0, 0, 1, 1));
    F.members.emplace_back("A.x1y1", mono(p, 1, 0, 1, 0));
    F.members.emplace_back("A.x2y2", mono(p, 0, 1, 0, 1));
    for (std::uint32_t i = 0; i < p; ++i)
        F.members.emplace_back("A.x1y2[i=" + std::to_string(i) + "]", mono(p, p - 1 - i, 0, 0, i));
    for (std::uint32_t i = 0; i < p; ++i)
        F.members.emplace_back("A.x2y1[i=" + std::to_string(i) + "]", mono(p, 0, p - 1 - i, i, 0));
    return F;
}

/// Generators of the O2+ invariant ring: the xi-symmetrized version of A.
inline NamedFamily set_B(std::uint32_t p) {
    PrimeField check(p);
    using families::mono;
    NamedFamily F{"B", p, std::nullopt, {}};
    F.members.emplace_back("B.x1x2", mono(p, 1, 1, 0, 0));
    F.members.emplace_back("B.y1y2", mono(p, 0, 0, 1, 1));
    F.members.emplace_back("B.u", families::pairing(p));
    for (std::uint32_t i = 0; i < p; ++i)
        F.members.emplace_back("B.sym[i=" + std::to_string(i) + "]",
                               mono(p, p - 1 - i, 0, 0, i) + mono(p, 0, p - 1 - i, i, 0));
    return F;
}

/// Generators of the O2- invariant ring: the two x-forms, the two dual
/// y-forms, the pairing, and the p trace generators Tr(x1^{p+1-i} y1^i).
/// Traces are computed via the transfer, never hand-expanded.
inline NamedFamily set_C(std::uint32_t p, std::optional<std::uint32_t> lambda_opt = std::nullopt,
                         const MatrixGroup* group = nullptr) {
    PrimeField check(p);
    using families::mono;
    std::uint32_t lam = lambda_opt.value_or(select_lambda(p));
    MatrixGroup local;
    if (!group) {
        local = orthogonal_group(p, OrthType::Minus, lam);
        group = &local;
    }
    std::uint32_t lam_inv = fp_inv(lam, p);
    NamedFamily F{"C", p, lam, {}};
    F.members.emplace_back("C.qx", mono(p, 2, 0, 0, 0) + mono(p, 0, 2, 0, 0, -(std::int64_t)lam));
    F.members.emplace_back("C.qx2",
                           mono(p, p + 1, 0, 0, 0) + mono(p, 0, p + 1, 0, 0, -(std::int64_t)lam));
    F.members.emplace_back("C.qy", mono(p, 0, 0, 2, 0) + mono(p, 0, 0, 0, 2, -(std::int64_t)lam_inv));
    F.members.emplace_back("C.qy2",
                           mono(p, 0, 0, p + 1, 0) + mono(p, 0, 0, 0, p + 1, -(std::int64_t)lam_inv));
    F.members.emplace_back("C.u", families::pairing(p));
    for (std::uint32_t i = 1; i <= p; ++i)
        F.members.emplace_back("C.tr[i=" + std::to_string(i) + "]",
                               transfer(*group, mono(p, p + 1 - i, 0, i, 0)));
    return F;
}

/// The 2p+2 module generators: f_i = u^i for 0 <= i <= p+1 and
/// f_{p+1+j} = Tr(x1^{p+1-j} y1^j) for 1 <= j <= p.
inline NamedFamily covariant_basis(std::uint32_t p,
                                   std::optional<std::uint32_t> lambda_opt = std::nullopt,
                                   const MatrixGroup* group = nullptr) {
    PrimeField check(p);
    std::uint32_t lam = lambda_opt.value_or(select_lambda(p));
    MatrixGroup local;
    if (!group) {
        local = orthogonal_group(p, OrthType::Minus, lam);
        group = &local;
    }
    NamedFamily F{"covariant_basis", p, lam, {}};
    Polynomial u = families::pairing(p);
    Polynomial acc = Polynomial::constant(p, 1);
    for (std::uint32_t i = 0; i <= p + 1; ++i) {
        F.members.emplace_back("f" + std::to_string(i), acc);
        acc = acc * u;
    }
    for (std::uint32_t j = 1; j <= p; ++j)
        F.members.emplace_back("f" + std::to_string(p + 1 + j),
                               transfer(*group, families::mono(p, p + 1 - j, 0, j, 0)));
    return F;
}

/// Homogeneous system of parameters for the product-group invariant ring:
/// the x-forms and y-forms of degrees 2 and p+1.
inline NamedFamily hsop_family(std::uint32_t p,
                               std::optional<std::uint32_t> lambda_opt = std::nullopt) {
    auto C = set_C(p, lambda_opt);
    NamedFamily F{"forms", p, C.lambda, {}};
    for (int i = 0; i < 4; ++i) F.members.push_back(C.members[i]);
    return F;
}

/// Two-variable vector-invariant families.
enum class VectorFamily { SO2plusX, O2plusX, O2minusX };

inline NamedFamily vector_family(std::uint32_t p, VectorFamily which,
                                 std::optional<std::uint32_t> lambda_opt = std::nullopt) {
    PrimeField check(p);
    using families::mono;
    NamedFamily F{"", p, std::nullopt, {}};
    switch (which) {
        case VectorFamily::SO2plusX:
            F.name = "vector_plus_special";
            F.members.emplace_back("V.x1x2", mono(p, 1, 1, 0, 0));
            F.members.emplace_back("V.x1^(p-1)", mono(p, p - 1, 0, 0, 0));
            F.members.emplace_back("V.x2^(p-1)", mono(p, 0, p - 1, 0, 0));
            break;
        case VectorFamily::O2plusX:
            F.name = "vector_plus";
            F.members.emplace_back("V.x1x2", mono(p, 1, 1, 0, 0));
            F.members.emplace_back("V.power_sum", mono(p, p - 1, 0, 0, 0) + mono(p, 0, p - 1, 0, 0));
            break;
        case VectorFamily::O2minusX: {
            F.name = "vector_minus";
            std::uint32_t lam = lambda_opt.value_or(select_lambda(p));
            F.lambda = lam;
            F.members.emplace_back("V.qx", mono(p, 2, 0, 0, 0) + mono(p, 0, 2, 0, 0, -(std::int64_t)lam));
            F.members.emplace_back(
                "V.qx2", mono(p, p + 1, 0, 0, 0) + mono(p, 0, p + 1, 0, 0, -(std::int64_t)lam));
            break;
        }
    }
    return F;
}

/// The two p=3 relations among the O2+ generators. Both expressions must
/// reduce to the zero polynomial over F_3.
inline std::vector<std::pair<std::string, Polynomial>> p3_relations() {
    const std::uint32_t p = 3;
    using families::mono;
    Polynomial f1 = mono(p, 1, 1, 0, 0);
    Polynomial f2 = mono(p, 2, 0, 0, 0) + mono(p, 0, 2, 0, 0);
    Polynomial f3 = mono(p, 0, 0, 1, 1);
    Polynomial f4 = mono(p, 0, 0, 2, 0) + mono(p, 0, 0, 0, 2);
    Polynomial u = families::pairing(p);
    Polynomial v = mono(p, 1, 0, 0, 1) + mono(p, 0, 1, 1, 0);
    std::vector<std::pair<std::string, Polynomial>> rels;
    rels.emplace_back("f1*f4 + f2*f3 - u*v", f1 * f4 + f2 * f3 - u * v);
    rels.emplace_back("f1*f3 + f2*f4 - u^2 - v^2", f1 * f3 + f2 * f4 - u * u - v * v);
    for (const auto& [label, r] : rels)
        if (!r.is_zero()) throw RelationFailed("relation '" + label + "' is nonzero over F_3");
    return rels;
}

} // namespace orthinv

#endif

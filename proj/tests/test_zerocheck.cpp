#include <doctest.h>

#include "orthinv/catalog.hpp"
#include "orthinv/zerocheck.hpp"

using namespace orthinv;

TEST_CASE("covariant matrix shape and first row") {
    CovariantMatrix M = build_covariant_matrix(3);
    CHECK(M.n == 8);
    auto basis = covariant_basis(3, M.lambda);
    for (std::size_t j = 0; j < M.n; ++j)
        CHECK(M.entries[0][j] == basis.members[j].second);  // row 0 is the identity pair
    CHECK(M.entries[0][1] == parse_poly("x1*y1 + x2*y2", 3));

    for (std::uint32_t p : {3u, 5u}) {
        CovariantMatrix Mp = build_covariant_matrix(p);
        CHECK(Mp.n == 2 * p + 2);
        for (std::size_t j = 0; j < Mp.n; ++j)
            for (std::size_t i = 0; i < Mp.n; ++i) {
                const Polynomial& f = Mp.entries[i][j];
                if (!f.is_zero()) CHECK(f.degree() == Mp.column_degrees[j]);
            }
    }
}

TEST_CASE("basis members are fixed by the diagonal subgroup") {
    for (std::uint32_t p : {3u, 5u}) {
        MatrixGroup G = orthogonal_group(p, OrthType::Minus);
        for (const auto& [label, f] : covariant_basis(p, G.lambda, &G).members)
            for (const auto& g : G.elements) CHECK(act(ProductElement{g, g}, f) == f);
    }
}

TEST_CASE("determinant certification") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        CovariantMatrix M = build_covariant_matrix(p);
        for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
            auto v = det_nonzero(M, seed, 3);
            CHECK(v.nonzero);
            CHECK(v.witness.has_value());
            CHECK(static_cast<std::uint64_t>(v.field_order) >= 100ull * v.degree_bound);
            CHECK(v.degree_bound == 2 * (p + 1) * (p + 1));
        }
    }
}

TEST_CASE("same seed gives the same witness") {
    CovariantMatrix M = build_covariant_matrix(3);
    auto a = det_nonzero(M, 5, 3);
    auto b = det_nonzero(M, 5, 3);
    REQUIRE(a.nonzero);
    CHECK(a.witness == b.witness);
}

TEST_CASE("row permutation cannot change the verdict") {
    CovariantMatrix M = build_covariant_matrix(3);
    CovariantMatrix P = M;
    std::swap(P.entries[0], P.entries[3]);
    std::swap(P.entries[1], P.entries[6]);
    CHECK(det_nonzero(M, 9, 3).nonzero == det_nonzero(P, 9, 3).nonzero);
}

TEST_CASE("duplicated row forces the zero verdict with the stated bound") {
    CovariantMatrix M = build_covariant_matrix(3);
    M.entries[1] = M.entries[0];
    auto v = det_nonzero(M, 0, 3);
    CHECK_FALSE(v.nonzero);
    CHECK(v.trials == 3);
    // degbound/q = 32/6561 < 1/100
    CHECK(v.failure_bound == "(32/" + std::to_string(v.field_order) + ")^3");
    CHECK(static_cast<double>(v.degree_bound) / static_cast<double>(v.field_order) < 0.01);
}

TEST_CASE("exact symbolic determinant at p=3") {
    CovariantMatrix M = build_covariant_matrix(3);
    Polynomial D = exact_matrix_det(M);
    CHECK_FALSE(D.is_zero());
    CHECK(D.degree() == 32);  // sum of the column degrees
    CHECK_THROWS_AS(exact_matrix_det(build_covariant_matrix(5)), PrimeTooLargeForExact);
}

TEST_CASE("the leading-term shortcut degenerates at p=3") {
    // the representative list contains both the order-two rotation (-1, 1)
    // and (eta, 1); their leading-term rows coincide because every basis
    // member's lex leading monomial omits x2, so this determinant vanishes
    // even though the full determinant does not
    CovariantMatrix M = build_covariant_matrix(3);
    CHECK(leading_term_matrix_det(M).is_zero());
    CHECK_THROWS_AS(leading_term_matrix_det(build_covariant_matrix(5)), PrimeTooLargeForExact);
}

TEST_CASE("exact polynomial determinant on synthetic input") {
    std::uint32_t p = 3;
    std::vector<std::vector<Polynomial>> id(3, std::vector<Polynomial>(3, Polynomial(p)));
    for (int i = 0; i < 3; ++i) id[i][i] = Polynomial::constant(p, 1);
    CHECK(poly_matrix_det(id, p) == Polynomial::constant(p, 1));

    std::vector<std::vector<Polynomial>> sing(2, std::vector<Polynomial>(2, Polynomial(p)));
    sing[0][0] = sing[1][0] = parse_poly("x1", p);
    sing[0][1] = sing[1][1] = parse_poly("y1", p);
    CHECK(poly_matrix_det(sing, p).is_zero());

    std::vector<std::vector<Polynomial>> m(2, std::vector<Polynomial>(2, Polynomial(p)));
    m[0][0] = parse_poly("x1", p);
    m[0][1] = parse_poly("y1", p);
    m[1][0] = parse_poly("x2", p);
    m[1][1] = parse_poly("y2", p);
    CHECK(poly_matrix_det(m, p) == parse_poly("x1*y2 - x2*y1", p));
}

#include <doctest.h>

#include "orthinv/catalog.hpp"
#include "orthinv/invariant.hpp"
#include "orthinv/matgroups.hpp"
#include "orthinv/poly.hpp"

using namespace orthinv;

namespace {

Polynomial random_poly(std::uint32_t p, Rng& rng, std::uint32_t max_terms = 4,
                       std::uint32_t max_exp = 2) {
    Polynomial f(p);
    std::uint32_t nterms = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
    for (std::uint32_t t = 0; t < nterms; ++t) {
        Monomial m;
        for (int j = 0; j < 4; ++j) m.e[j] = static_cast<std::uint32_t>(rng.below(max_exp + 1));
        f.add_term(m, static_cast<std::int64_t>(rng.below(p)));
    }
    return f;
}

} // namespace

TEST_CASE("single element actions") {
    std::uint32_t p = 5;
    std::uint32_t a = primitive_root(p);
    Mat2 tau = tau_matrix(p, a);
    // tau scales x1^u x2^v y1^s y2^t by a^(u + t - v - s)
    Polynomial m = parse_poly("x1^2*x2*y1*y2^3", p);
    std::int64_t w = 2 + 3 - 1 - 1;
    CHECK(act(tau, m) == m.scalar_mul(fp_pow(a, static_cast<std::uint64_t>(w), p)));
    CHECK(act(xi_matrix(p), parse_poly("x1*y1", p)) == parse_poly("x2*y2", p));
    CHECK(act(Mat2::identity(p), m) == m);
}

TEST_CASE("reynolds operator") {
    MatrixGroup G5 = orthogonal_group(5, OrthType::Plus);
    CHECK(reynolds(G5, parse_poly("x1*y1", 5)) == parse_poly("3*x1*y1 + 3*x2*y2", 5));
    CHECK(reynolds(G5, parse_poly("x1", 5)).is_zero());  // no linear invariants
    Polynomial u = parse_poly("x1*y1 + x2*y2", 5);
    CHECK(reynolds(G5, u) == u);
}

TEST_CASE("reynolds properties on random polynomials") {
    Rng rng(101);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        MatrixGroup G = orthogonal_group(p, OrthType::Plus);
        for (int i = 0; i < 200; ++i) {
            Polynomial f = random_poly(p, rng);
            Polynomial rf = reynolds(G, f);
            CHECK(reynolds(G, rf) == rf);  // idempotent
            const Mat2& g = G.elements[rng.below(G.order())];
            CHECK(reynolds(G, act(g, f)) == rf);  // pre-averaging invariance
            CHECK(act(g, rf) == rf);              // lands in the fixed ring
        }
    }
}

TEST_CASE("relative reynolds") {
    MatrixGroup G = orthogonal_group(5, OrthType::Plus);
    MatrixGroup H = special_subgroup(G);
    std::uint32_t half = fp_inv(2, 5);
    Polynomial f = parse_poly("x2*y2", 5);
    Polynomial want = parse_poly("x2*y2 + x1*y1", 5).scalar_mul(half);
    CHECK(relative_reynolds(G, H, f) == want);

    // p = 3 display: x1^(2-i) y2^i averages with its mirror
    MatrixGroup G3 = orthogonal_group(3, OrthType::Plus);
    MatrixGroup H3 = special_subgroup(G3);
    std::uint32_t half3 = fp_inv(2, 3);
    for (int i = 0; i <= 2; ++i) {
        Polynomial g = Polynomial::from_term(3, {{2u - i, 0, 0, static_cast<std::uint32_t>(i)}}, 1);
        Polynomial mirror =
            Polynomial::from_term(3, {{0, 2u - i, static_cast<std::uint32_t>(i), 0}}, 1);
        CHECK(relative_reynolds(G3, H3, g) == (g + mirror).scalar_mul(half3));
    }

    Polynomial u = parse_poly("x1*y1 + x2*y2", 5);
    CHECK(relative_reynolds(G, H, u) == u);
    CHECK_THROWS_AS(relative_reynolds(G, H, parse_poly("x1", 5)), NotHInvariant);
}

TEST_CASE("transfer") {
    MatrixGroup G3 = orthogonal_group(3, OrthType::Minus);
    CHECK(transfer(G3, Polynomial::constant(3, 1)) == Polynomial::constant(3, 8));
    Rng rng(13);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        MatrixGroup G = orthogonal_group(p, OrthType::Minus);
        for (int i = 0; i < 50; ++i) {
            Polynomial f = random_poly(p, rng);
            Polynomial tf = transfer(G, f);
            for (const auto& g : G.generators) CHECK(act(g, tf) == tf);
            // module homomorphism over the invariant ring
            Polynomial u = parse_poly("x1*y1 + x2*y2", p);
            CHECK(transfer(G, u * f) == u * tf);
        }
    }
}

TEST_CASE("fixed space dimensions") {
    MatrixGroup S5 = special_subgroup(orthogonal_group(5, OrthType::Plus));
    auto basis = fixed_space(GroupAction::single(S5), 2);
    CHECK(basis.size() == 4);
    DegreeFrame frame(2);
    RowSpace span(5, frame.size());
    for (const auto& f : basis) span.insert(frame.row_of(f));
    for (const char* s : {"x1*x2", "y1*y2", "x1*y1", "x2*y2"})
        CHECK(span.contains(frame.row_of(parse_poly(s, 5))));

    MatrixGroup S3 = special_subgroup(orthogonal_group(3, OrthType::Plus));
    CHECK(fixed_space(GroupAction::single(S3), 2).size() == 10);

    for (std::uint32_t p : {3u, 5u, 7u})
        CHECK(fixed_space(GroupAction::single(orthogonal_group(p, OrthType::Minus)), 0).size() == 1);
}

TEST_CASE("fixed space agrees with the all-elements definition") {
    Rng rng(77);
    for (std::uint32_t p : {3u, 5u}) {
        MatrixGroup G = orthogonal_group(p, OrthType::Minus);
        GroupAction ga = GroupAction::single(G);
        for (std::uint32_t d = 0; d <= 5; ++d) {
            auto basis = fixed_space(ga, d);
            for (const auto& f : basis)
                for (const auto& g : G.elements) CHECK(act(g, f) == f);
            // no invariant escapes: project a few random polynomials and check
            // containment of the result
            DegreeFrame frame(d);
            RowSpace span(p, frame.size());
            for (const auto& f : basis) span.insert(frame.row_of(f));
            for (int i = 0; i < 20; ++i) {
                Polynomial f(p);
                for (const auto& m : frame.monomials())
                    f.add_term(m, static_cast<std::int64_t>(rng.below(p)));
                CHECK(span.contains(frame.row_of(reynolds(G, f))));
            }
        }
    }
}

TEST_CASE("hilbert dims of the product group") {
    MatrixGroup G3 = orthogonal_group(3, OrthType::Minus);
    auto dims = hilbert_dims(GroupAction::product(G3, G3), 8);
    CHECK(dims == std::vector<std::size_t>{1, 0, 2, 0, 5, 0, 8, 0, 14});
    for (std::size_t d = 1; d <= 8; d += 2) CHECK(dims[d] == 0);
}

TEST_CASE("series expansion") {
    CHECK(series_expand({1}, {1, -1}, 4).coefficients == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(series_expand({1}, one_minus_tk_product({2, 2, 4, 4}), 4).coefficients ==
          std::vector<long long>{1, 0, 2, 0, 5});
    CHECK(series_expand({1, 0, -1}, {1, 0, -1}, 3).coefficients ==
          std::vector<long long>{1, 0, 0, 0});
    CHECK_THROWS_AS(series_expand({1}, {0, 1}, 3), BadDenominator);
}

TEST_CASE("series quotient numerator and s-invariant") {
    // p = 3 quotient: numerator 1 + t^2 + 4 t^4 + t^6 + t^8
    MatrixGroup G3 = orthogonal_group(3, OrthType::Minus);
    auto dims = hilbert_dims(GroupAction::single(G3), 12);
    auto num = quotient_numerator(dims, {2, 2, 4, 4}, 12);
    CHECK(num == std::vector<long long>{1, 0, 1, 0, 4, 0, 1, 0, 1, 0, 0, 0, 0});
    auto [s, r] = s_invariant(num);
    CHECK(s == 32);
    CHECK(r == 8);

    auto [s0, r0] = s_invariant({1});
    CHECK(s0 == 0);
    CHECK(r0 == 1);
}

TEST_CASE("s-invariant for p in {3,5,7}") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        MatrixGroup G = orthogonal_group(p, OrthType::Minus);
        std::uint32_t D = 2 * (p + 1) + 2;
        auto dims = hilbert_dims(GroupAction::single(G), D);
        auto num = quotient_numerator(dims, {2, 2, p + 1, p + 1}, D);
        auto [s, r] = s_invariant(num);
        CHECK(s == 2ll * (p + 1) * (p + 1));
        CHECK(r == 2ll * (p + 1));
    }
}

TEST_CASE("generating set verification catches a dropped generator") {
    MatrixGroup G = orthogonal_group(5, OrthType::Plus);
    GroupAction ga = GroupAction::single(G);
    auto B = set_B(5).members;
    CHECK(verify_generating_set(ga, B, 10).pass);

    // drop x1*x2: degree 2 must fall short
    std::vector<std::pair<std::string, Polynomial>> crippled(B.begin() + 1, B.end());
    auto report = verify_generating_set(ga, crippled, 10);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.rows[2].ok);
    CHECK(report.rows[2].dim_actual < report.rows[2].dim_expected);

    auto junk = B;
    junk.emplace_back("junk", parse_poly("x1", 5));
    CHECK_THROWS_AS(verify_generating_set(ga, junk, 10), NotInvariantGenerator);
}

TEST_CASE("free basis verification and its failure mode") {
    std::uint32_t p = 3;
    MatrixGroup G = orthogonal_group(p, OrthType::Minus);
    auto hsop = hsop_family(p).members;
    auto basis = covariant_basis(p, G.lambda, &G).members;
    auto ok = verify_free_basis(GroupAction::single(G), GroupAction::product(G, G), hsop, basis,
                                12);
    CHECK(ok.pass);

    // zero out f_1 = u: the module misses invariants from degree 2 on
    auto broken = basis;
    broken[1].second = Polynomial(p);
    auto bad = verify_free_basis(GroupAction::single(G), GroupAction::product(G, G), hsop, broken,
                                 12);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.rows[2].ok);
}

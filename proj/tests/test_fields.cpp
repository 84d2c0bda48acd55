#include <doctest.h>

#include <map>

#include "orthinv/fields.hpp"

using namespace orthinv;

TEST_CASE("prime field validation") {
    CHECK_THROWS_AS(PrimeField(4), NotPrime);
    CHECK_THROWS_AS(PrimeField(2), NotPrime);
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(97));
}

TEST_CASE("field inverse") {
    CHECK(fp_inv(3, 7) == 5);
    CHECK(fp_inv(1, 5) == 1);
    CHECK(fp_inv(11, 13) == 6);
    CHECK_THROWS_AS(fp_inv(0, 7), ZeroInverse);

    for (std::uint32_t p : {3u, 5u, 7u, 13u})
        for (std::uint32_t a = 1; a < p; ++a) {
            CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
            for (std::uint32_t k = 0; k <= p - 1; ++k)
                CHECK(fp_mul(fp_pow(a, k, p), fp_pow(a, p - 1 - k, p), p) == 1);
        }
}

TEST_CASE("primitive root is the smallest generator") {
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);

    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        std::uint32_t a = primitive_root(p);
        CHECK(fp_pow(a, p - 1, p) == 1);
        for (std::uint32_t d = 1; d < p - 1; ++d)
            if ((p - 1) % d == 0) CHECK(fp_pow(a, d, p) != 1);
    }
}

TEST_CASE("lambda selection") {
    CHECK(select_lambda(7) == 6);   // -1 since 7 = 3 (mod 4)
    CHECK(select_lambda(3) == 2);   // -1
    CHECK(select_lambda(5) == 2);   // smallest generator, 2^2 = -1 (mod 5)
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
        CHECK(fp_pow(select_lambda(p), (p - 1) / 2, p) == p - 1);  // Euler non-square check
}

TEST_CASE("extension field construction and inverses") {
    for (auto [p, e] : {std::pair<std::uint32_t, std::uint32_t>{3, 2}, {3, 4}, {5, 2}, {7, 2},
                        {3, 1}, {5, 3}}) {
        ExtensionField F = ExtensionField::make(p, e);
        CHECK(F.modulus.size() == e + 1);
        CHECK(F.modulus.back() == 1);
        if (F.order() <= 2000) {
            // every nonzero element invertible: walk the whole field
            ExtElem a(e, 0);
            std::uint64_t count = 0;
            while (true) {
                if (!ext_is_zero(a)) {
                    ExtElem inv = ext_inv(F, a);
                    CHECK(ext_mul(F, a, inv) == ext_embed(F, 1));
                    ++count;
                }
                std::uint32_t i = 0;
                while (i < e && a[i] == p - 1) { a[i] = 0; ++i; }
                if (i == e) break;
                ++a[i];
            }
            CHECK(count == F.order() - 1);
        }
    }
    CHECK_THROWS_AS(ext_inv(ExtensionField::make(3, 2), ext_zero(ExtensionField::make(3, 2))),
                    ZeroInverse);
}

TEST_CASE("seeded draws are deterministic and in range") {
    ExtensionField F = ExtensionField::make(5, 1);
    Rng r1(42), r2(42);
    for (int i = 0; i < 50; ++i) {
        ExtElem a = random_ext_element(F, r1);
        ExtElem b = random_ext_element(F, r2);
        CHECK(a == b);
        CHECK(a[0] < 5);
    }
}

TEST_CASE("extension sampling is roughly uniform") {
    ExtensionField F = ExtensionField::make(3, 2);
    Rng rng(7);
    std::map<ExtElem, int> freq;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++freq[random_ext_element(F, rng)];
    // 9 outcomes, expectation ~1111, sd ~31; 5 sigma window
    for (const auto& [elem, n] : freq) {
        CHECK(n > 1111 - 5 * 32);
        CHECK(n < 1111 + 5 * 32);
    }
    CHECK(freq.size() == 9);
}

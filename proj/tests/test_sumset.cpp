#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gono/additive_set.hpp"
#include "gono/errors.hpp"
#include "gono/fibonacci.hpp"
#include "gono/fibsets.hpp"

using gono::AdditiveSet;

namespace {

AdditiveSet random_set(std::mt19937_64& rng, std::int64_t modulus, int max_size) {
    AdditiveSet a(modulus);
    int size = int(rng() % std::uint64_t(max_size + 1));
    for (int t = 0; t < size; ++t) a.insert(std::int64_t(rng() % std::uint64_t(modulus)));
    return a;
}

AdditiveSet brute_sumset(const AdditiveSet& a, const AdditiveSet& b) {
    AdditiveSet out(a.modulus());
    for (std::int64_t x : a.elements())
        for (std::int64_t y : b.elements()) out.insert(x + y);
    return out;
}

} // namespace

TEST_CASE("set basics") {
    AdditiveSet a = AdditiveSet::from_elements(10, {1, 9});
    CHECK(a.size() == 2);
    CHECK(a.contains(1));
    CHECK(a.contains(-1));                        // reduced mod 10
    CHECK(a.contains(11));
    CHECK_FALSE(a.contains(2));
    CHECK((a + a).elements() == std::vector<std::int64_t>{0, 2, 8});

    AdditiveSet zero = AdditiveSet::singleton_zero(10);
    CHECK((a + zero) == a);

    CHECK(AdditiveSet(1).modulus() == 1);
    AdditiveSet one(1);
    one.insert(12345);
    CHECK(one.full());

    CHECK_THROWS_AS(AdditiveSet(0), gono::precondition_error);
    CHECK_THROWS_AS(AdditiveSet(AdditiveSet::kModulusCap + 1), gono::limit_error);
    CHECK_THROWS_AS(AdditiveSet::from_elements(5, {0}) + AdditiveSet::from_elements(7, {0}),
                    gono::precondition_error);
}

TEST_CASE("sumset kernel against brute force across word boundaries") {
    std::mt19937_64 rng(11);
    std::vector<std::int64_t> moduli = {2, 3, 63, 64, 65, 127, 128, 129, 200, 1024};
    for (std::int64_t m : moduli)
        for (int trial = 0; trial < 8; ++trial) {
            AdditiveSet a = random_set(rng, m, 12);
            AdditiveSet b = random_set(rng, m, 12);
            CAPTURE(m);
            CHECK((a + b) == brute_sumset(a, b));
            CHECK((a + b) == (b + a));
        }
}

TEST_CASE("iterated sumsets") {
    AdditiveSet a = gono::family_additive_set(gono::FibFamily::strip_a, 3);
    CHECK(gono::iterated_sumset(a, 0) == AdditiveSet::singleton_zero(8));
    CHECK(gono::iterated_sumset(a, 1) == a);
    CHECK(gono::iterated_sumset(a, 2).full());    // {0,3,4,5} doubles to all of Z/8
    CHECK(gono::iterated_sumset(a, 2) == a + a);
}

TEST_CASE("covering numbers") {
    AdditiveSet a3 = gono::family_additive_set(gono::FibFamily::strip_a, 3);
    CHECK(gono::covering_number(a3) == 2);

    AdditiveSet subgroup = AdditiveSet::from_elements(8, {0, 2, 4, 6});
    CHECK_FALSE(gono::covering_number(subgroup).has_value());

    CHECK(gono::covering_number(AdditiveSet::singleton_zero(1)) == 0);
    CHECK(gono::covering_number(AdditiveSet::from_elements(5, {0, 1})) == 4);

    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(gono::covering_number(gono::family_additive_set(gono::FibFamily::strip_a, n)) ==
              n - 1);
        CHECK(gono::covering_number(gono::family_additive_set(gono::FibFamily::fan_a, n)) ==
              n - 1);
        CHECK(gono::covering_number(gono::family_additive_set(gono::FibFamily::strip_b, n)) ==
              n - 1);
    }
}

TEST_CASE("sumset gonality search") {
    int expected_degree[] = {2, 2, 3, 3, 4, 4, 5, 5, 5};
    std::int64_t expected_witness[] = {0, 0, 5, 21, 47, 309, 157, 610, 1597};
    for (int n = 2; n <= 10; ++n) {
        gono::SumsetGonality out =
            gono::gonality_sumset(gono::family_additive_set(gono::FibFamily::strip_a, n), 1);
        CAPTURE(n);
        CHECK(out.degree == expected_degree[n - 2]);
        CHECK(out.witness == expected_witness[n - 2]);
    }

    int fan_degree[] = {2, 2, 3, 3, 4, 4, 4};
    std::int64_t fan_witness[] = {0, 2, 2, 5, 5, 13, 94};
    for (int n = 2; n <= 8; ++n) {
        gono::SumsetGonality out =
            gono::gonality_sumset(gono::family_additive_set(gono::FibFamily::fan_a, n), 1);
        CAPTURE(n);
        CHECK(out.degree == fan_degree[n - 2]);
        CHECK(out.witness == fan_witness[n - 2]);
    }
}

TEST_CASE("gonality is monotone in the target rank") {
    for (int n = 3; n <= 6; ++n) {
        AdditiveSet a = gono::family_additive_set(gono::FibFamily::strip_a, n);
        int prev = 0;
        for (int r = 1; r <= 3; ++r) {
            int d = gono::gonality_sumset(a, r).degree;
            CHECK(d >= prev);
            CHECK(d >= r);
            prev = d;
        }
    }
}

TEST_CASE("affine images") {
    AdditiveSet a = AdditiveSet::from_elements(10, {1, 2});
    CHECK(gono::affine_image(a, 0, true).elements() == std::vector<std::int64_t>{8, 9});
    CHECK(gono::affine_image(a, 3, false).elements() == std::vector<std::int64_t>{4, 5});
    CHECK(gono::affine_image(a, 1, true).elements() == std::vector<std::int64_t>{0, 9});
}

TEST_CASE("alternating-square family is an affine image of the product family") {
    for (int n = 2; n <= 14; ++n) {
        AdditiveSet a = gono::family_additive_set(gono::FibFamily::strip_a, n);
        AdditiveSet b = gono::family_additive_set(gono::FibFamily::strip_b, n);
        gono::int128 fn2 = gono::fib(n) * gono::fib(n);
        std::int64_t shift = std::int64_t(gono::mod_floor(fn2, gono::fib(2 * n)));
        CAPTURE(n);
        if (n % 2 == 0)
            CHECK(b == gono::affine_image(a, -shift, false));
        else
            CHECK(b == gono::affine_image(a, shift, true));
    }
    CHECK(gono::family_additive_set(gono::FibFamily::strip_b, 3).elements() ==
          std::vector<std::int64_t>{0, 1, 4, 7});
}

TEST_CASE("freiman isomorphism check") {
    AdditiveSet a4 = gono::family_additive_set(gono::FibFamily::strip_a, 4);
    CHECK(a4.elements() == std::vector<std::int64_t>{0, 8, 9, 10, 13});

    auto identity = [](std::int64_t x) { return x; };
    CHECK_FALSE(gono::freiman_check(a4, identity, 21, 2).has_value());
    CHECK_FALSE(gono::freiman_check(a4, identity, 21, 3).has_value());

    // Swapping two elements breaks additivity; the first witness in
    // enumeration order pairs 0+0 with 8+13 (both sums are 0 mod 21).
    auto swap89 = [](std::int64_t x) { return x == 8 ? 9 : x == 9 ? 8 : x; };
    auto violation = gono::freiman_check(a4, swap89, 21, 2);
    REQUIRE(violation.has_value());
    CHECK(violation->left == std::vector<std::int64_t>{0, 0});
    CHECK(violation->right == std::vector<std::int64_t>{8, 13});

    CHECK_THROWS_AS(gono::freiman_check(a4, identity, 21, 3, 5), gono::limit_error);
}

#include <catch_amalgamated.hpp>

#include "pkit/structure.hpp"

using namespace pkit;

namespace {

Weight B(std::vector<int> balls) { return Weight::from_balls(std::move(balls)); }

}  // namespace

TEST_CASE("dagger", "[structure]")
{
    CHECK(dagger(B({3, 2, 1, -1})) == B({4, 2, 1, 0}));
    CHECK(dagger(Weight::from_coords({10, 8, 4, 3, 1})) == Weight::from_coords({14, 12, 8, 7, 5}));
    for (int n = 1; n <= 5; ++n)
        for (int k = -3; k <= 3; ++k) CHECK(dagger(shift(Weight::zero(n), k)) == shift(Weight::zero(n), k));
}

TEST_CASE("sharp", "[structure]")
{
    auto e4 = B({3, 2, 1, -1});
    CHECK(sharp(e4).weight == e4);
    for (int n = 1; n <= 5; ++n)
        for (int k = -3; k <= 3; ++k) {
            auto w = shift(Weight::zero(n), k);
            CHECK(sharp(w).weight == shift(Weight::zero(n), -k));
        }
    auto t = Weight::from_coords({10, 8, 4, 3, 1});
    CHECK(sharp(t).weight == Weight::from_coords({-5, -7, -8, -12, -14}));
    for (const auto& w : weights_in_window(3, {-4, 4})) CHECK(sharp(sharp(w).weight).weight == w);
}

TEST_CASE("dual_kac", "[structure]")
{
    for (int n = 1; n <= 4; ++n) {
        CHECK(dual_kac(Family::Nabla, Weight::zero(n)) == shift(Weight::zero(n), 1 - n));
        CHECK(dual_kac(Family::Delta, Weight::zero(n)) == shift(Weight::zero(n), -(n + 1)));
    }
    for (const auto& w : weights_in_window(3, {-3, 3})) {
        CHECK(dual_kac(Family::Delta, dual_kac(Family::Delta, w)) == w);
        CHECK(dual_kac(Family::Nabla, dual_kac(Family::Nabla, w)) == w);
    }
    CHECK_THROWS(dual_kac(Family::Simple, Weight::zero(2)));
}

TEST_CASE("maximal slides", "[structure]")
{
    auto z = Weight::zero(3);
    CHECK(max_solid_slide(shift(z, 2)) == z);
    CHECK(max_dashed_slide(shift(z, 4)) == z);
    CHECK(max_solid_slide(Weight::rho(3)) == Weight::rho(3));
    for (const auto& t : weights_in_window(3, {-5, 5})) CHECK(max_dashed_slide(shift(t, 2)) == max_solid_slide(t));
}

TEST_CASE("socles of Kac modules", "[structure]")
{
    auto z = Weight::zero(3), r = Weight::rho(3);
    CHECK(cosocle_nabla(z) == shift(z, 2));
    CHECK(socle_delta(z) == shift(z, 4));
    CHECK(cosocle_nabla(r) == r);
    CHECK(socle_delta(r) == shift(r, 2));
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : weights_in_window(n, {-4, 4})) {
            CHECK(cosocle_nabla(w) == cosocle_nabla_closed_form(w));
            if (is_typical(w)) CHECK(cosocle_nabla(w) == w);
        }
}

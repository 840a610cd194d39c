#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pkit/arrows.hpp"
#include "pkit/grothendieck.hpp"
#include "pkit/structure.hpp"
#include "pkit/translation.hpp"

using namespace pkit;

namespace {

constexpr int kSamples = 200;

}  // namespace

TEST_CASE("diagram round trip and shifts", "[properties]")
{
    std::mt19937 rng(11);
    for (int s = 0; s < kSamples; ++s) {
        const int n = 1 + s % 6;
        auto w = oracle::random_weight(rng, n, {-15, 15});
        CHECK(diagram_to_weight(weight_to_diagram(w)) == w);
        CHECK(gl_dim(shift(w, 7)) == gl_dim(w));
        CHECK(kappa(shift(w, 2)) == kappa(w));
        CHECK(shift(shift(w, 3), -3) == w);
        CHECK(leq(w, w));
    }
}

TEST_CASE("up and down sets meet only in lambda", "[properties]")
{
    std::mt19937 rng(12);
    for (int s = 0; s < kSamples; ++s) {
        const int n = 1 + s % 5;
        auto w = oracle::random_weight(rng, n, {-20, 20});
        auto up = up_set(w), down = down_set(w);
        std::vector<Weight> both;
        std::set_intersection(up.begin(), up.end(), down.begin(), down.end(), std::back_inserter(both));
        CHECK(both == std::vector<Weight>{w});
        for (const auto& m : up) CHECK(member_up(w, m));
        for (const auto& m : down) CHECK(member_down(w, m));
        for (const auto& m : up) CHECK(leq(w, m));
    }
}

TEST_CASE("hom symmetry under shift by 2 omega", "[properties]")
{
    std::mt19937 rng(13);
    for (int s = 0; s < kSamples; ++s) {
        const int n = 1 + s % 3;
        auto l = oracle::random_weight(rng, n, {-5, 5});
        auto m = oracle::random_weight(rng, n, {-5, 5});
        CHECK(hom_dim(l, m) == hom_dim(shift(m, 2), l));
        CHECK(pairing(proj_to_delta(l), proj_to_nabla(m)) == hom_dim(l, m));
    }
}

TEST_CASE("sharp and socles on random weights", "[properties]")
{
    std::mt19937 rng(14);
    for (int s = 0; s < kSamples; ++s) {
        const int n = 1 + s % 4;
        auto w = oracle::random_weight(rng, n, {-10, 10});
        auto sh = sharp(w);
        CHECK(sharp(sh.weight).weight == w);
        CHECK(sharp(sh.weight).m == sh.m);
        CHECK(cosocle_nabla(w) == cosocle_nabla_closed_form(w));
        CHECK(max_solid_slide(cosocle_nabla(w)) == w);
        CHECK(max_dashed_slide(socle_delta(w)) == w);
    }
}

TEST_CASE("translation relations on random weights", "[properties]")
{
    std::mt19937 rng(15);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int s = 0; s < kSamples; ++s) {
        const int n = 1 + s % 4;
        auto w = oracle::random_weight(rng, n, {-6, 6});
        const int k = pick(rng), j = k + 2 + (s % 5);
        for (Family f : {Family::Delta, Family::Nabla}) {
            auto v = GVector::basis(f, w);
            CHECK(theta_prime(k, theta_prime(k, v)).reduced().is_zero());
            CHECK(theta_prime(k, theta_prime(j, v)).reduced() == theta_prime(j, theta_prime(k, v)).reduced());
            auto once = theta_prime(k, v).reduced();
            CHECK(theta_prime(k, theta_prime(k + 1, theta_prime(k, v))).reduced() == once);
            CHECK(theta_prime(k, theta_prime(k - 1, theta_prime(k, v))).reduced() == once);
        }
        auto p = proj_to_delta(w);
        auto mu = theta_proj_weight(k, w);
        CHECK(theta_prime(k, p).reduced() == (mu ? proj_to_delta(*mu) : GVector(Family::Delta)));
    }
}

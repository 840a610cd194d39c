#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pkit/json_io.hpp"

using namespace pkit;

TEST_CASE("weight json round trip", "[json]")
{
    std::mt19937 rng(21);
    for (int s = 0; s < 100; ++s) {
        auto w = oracle::random_weight(rng, 1 + s % 5, {-10, 10});
        auto j = to_json(w);
        CHECK(j["n"] == w.n());
        CHECK(j["coords"].get<std::vector<int>>() == w.coords());
        CHECK(weight_from_json(j) == w);
        CHECK(weight_from_json(nlohmann::json::parse(j.dump())) == w);
    }
}

TEST_CASE("gvector json round trip", "[json]")
{
    auto v = proj_to_delta(Weight::zero(3)) + GVector::basis(Family::Delta, Weight::rho(3), 1);
    CHECK(gvector_from_json(to_json(v)) == v);
    auto big = GVector::basis(Family::Simple, Weight::zero(2));
    big.add({Family::Simple, Weight::zero(2), 0}, BigInt("123456789012345678901234567890"));
    CHECK(gvector_from_json(to_json(big)) == big);
    CHECK(gvector_from_json(to_json(GVector(Family::Nabla))).is_zero());
}

TEST_CASE("text rendering", "[json]")
{
    CHECK(to_text(proj_to_delta(Weight::zero(2))) == "[Δ(-1,-1)] + [Δ(0,0)]");
    CHECK(to_text(GVector::basis(Family::Nabla, Weight::zero(1), 1)) == "Π[∇(0)]");
    WedgeVector w;
    w.add({3, 1}, 1);
    CHECK(to_text(w) == "u3∧u1");
}

TEST_CASE("arrow and block json", "[json]")
{
    auto a = to_json(build_arrows(Weight::from_coords({1, 1, 0, 0})));
    CHECK(a["solid"]["4"].get<std::vector<int>>() == std::vector<int>{-2, 2});
    CHECK(a["dashed"]["-3"].get<std::vector<int>>() == std::vector<int>{1, 3});
    auto b = to_json(BlockLabel{-1, false});
    CHECK(b["p"] == -1);
    CHECK(b["sign"] == "-");
}

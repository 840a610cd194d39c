#include <catch_amalgamated.hpp>

#include "pkit/blocks.hpp"

using namespace pkit;

TEST_CASE("block_of standard placements", "[blocks]")
{
    for (int n = 1; n <= 9; ++n) {
        CHECK(block_of(Weight::zero(n), 0) == BlockLabel{n % 2, true});
        const int r = n % 8;
        const bool plus = r == 7 || r == 0 || r == 1 || r == 2;
        CHECK(block_of(Weight::rho(n), 0) == BlockLabel{n, plus});
        CHECK(block_of(Weight::rho(n), 1) == BlockLabel{n, !plus});
    }
}

TEST_CASE("all_block_labels", "[blocks]")
{
    for (int n = 1; n <= 6; ++n) CHECK(all_block_labels(n).size() == static_cast<size_t>(2 * (n + 1)));
}

TEST_CASE("n = 1 splits by parity of the ball", "[blocks]")
{
    auto comps = block_components_oracle(1, {-6, 6});
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) {
        const int parity = ((c.weights.front().balls()[0] % 2) + 2) % 2;
        for (const auto& w : c.weights) CHECK(((w.balls()[0] % 2) + 2) % 2 == parity);
    }
}

TEST_CASE("interior components are the kappa levels", "[blocks]")
{
    for (int n = 1; n <= 3; ++n) {
        Window win{-4 * n, 4 * n};
        auto s = summarize_interior(n, win, block_components_oracle(n, win));
        INFO("n=" << n);
        CHECK(s.kappa_constant);
        CHECK(s.matches_kappa_levels());
        CHECK(s.components_per_kappa.size() == static_cast<size_t>(n + 1));
    }
}

TEST_CASE("blocks_report", "[blocks]")
{
    auto r = blocks_report(2, {-8, 8});
    CHECK(r.kappa_level_sizes.size() == 3);
    CHECK(r.kappa_level_sizes.count(-2) == 1);
    CHECK(r.block_count == 6);
    CHECK(r.p_transition.ok());
    CHECK(r.sign_tracked.ok());
    CHECK(r.parity_coherent.ok());
    // the tabulated sign rule disagrees with the tracked parities on some edges
    CHECK_FALSE(r.sign_tabulated.ok());
}

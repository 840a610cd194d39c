#pragma once

#include <map>
#include <vector>

#include "pkit/report.hpp"
#include "pkit/translation.hpp"
#include "pkit/weights.hpp"

namespace pkit {

BlockLabel block_of(const Weight& lambda, int hw_parity);
std::vector<BlockLabel> all_block_labels(int n);

struct Component {
    int kappa = 0;
    std::vector<Weight> weights;
};

// Connected components of the slide graph on all weights with balls in the window.
std::vector<Component> block_components_oracle(int n, const Window& window);

struct InteriorSummary {
    std::map<int, int> components_per_kappa;  // among components meeting the interior
    bool kappa_constant = true;
    int interior_weights = 0;
    bool matches_kappa_levels() const;
};

// Interior = weights whose balls are at distance >= 2n from both window edges.
InteriorSummary summarize_interior(int n, const Window& window, const std::vector<Component>& comps);

struct BlocksReport {
    int n = 0;
    Window window;
    std::map<int, int> kappa_level_sizes;
    InteriorSummary interior;
    int block_count = 0;  // interior kappa levels doubled by sign
    CheckReport p_transition{"theta_proj edges: kappa transition"};
    CheckReport sign_tabulated{"theta_proj edges: sign transition (tabulated rule)"};
    CheckReport sign_tracked{"theta_proj edges: sign transition (Pi^i with V weight parities)"};
    CheckReport parity_coherent{"theta_proj: Delta-filtration parities of the image lie in one block"};
    nlohmann::json to_json() const;
};

BlocksReport blocks_report(int n, const Window& window);

}  // namespace pkit

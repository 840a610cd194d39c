#include "pkit/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "pkit/arrows.hpp"

namespace pkit {

using nlohmann::json;

BlockLabel block_of(const Weight& lambda, int hw_parity)
{
    return {kappa(lambda), (hw_parity & 1) == q_parity(lambda)};
}

std::vector<BlockLabel> all_block_labels(int n)
{
    std::vector<BlockLabel> out;
    for (int p = -n; p <= n; p += 2)
        for (bool s : {true, false}) out.push_back({p, s});
    return out;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool inside(const Weight& w, const Window& window)
{
    return window.contains(w.balls().front()) && window.contains(w.balls().back());
}

}  // namespace

std::vector<Component> block_components_oracle(int n, const Window& window)
{
    auto ws = weights_in_window(n, window);
    std::map<Weight, int> index;
    for (size_t k = 0; k < ws.size(); ++k) index[ws[k]] = static_cast<int>(k);
    DisjointSets ds(ws.size());
    for (size_t k = 0; k < ws.size(); ++k) {
        const auto a = build_arrows(ws[k]);
        auto link = [&](const Weight& other) {
            if (!inside(other, window)) return;
            ds.unite(static_cast<int>(k), index.at(other));
        };
        for (const auto& [i, ts] : a.solid)
            for (int j : ts) link(move_ball(ws[k], i, j));
        for (const auto& [j, ts] : a.dashed)
            for (int i : ts) link(move_ball(ws[k], i, j));
    }
    std::map<int, Component> by_root;
    for (size_t k = 0; k < ws.size(); ++k) {
        auto& c = by_root[ds.find(static_cast<int>(k))];
        if (c.weights.empty()) c.kappa = kappa(ws[k]);
        c.weights.push_back(ws[k]);
    }
    std::vector<Component> out;
    for (auto& [r, c] : by_root) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const Component& x, const Component& y) {
        return x.weights.front() < y.weights.front();
    });
    return out;
}

bool InteriorSummary::matches_kappa_levels() const
{
    if (!kappa_constant || interior_weights == 0) return false;
    for (const auto& [k, c] : components_per_kappa)
        if (c != 1) return false;
    return true;
}

InteriorSummary summarize_interior(int n, const Window& window, const std::vector<Component>& comps)
{
    Window interior{window.lo + 2 * n, window.hi - 2 * n};
    InteriorSummary s;
    for (const auto& c : comps) {
        bool meets = false;
        for (const auto& w : c.weights) {
            if (kappa(w) != c.kappa) s.kappa_constant = false;
            if (!interior.empty() && inside(w, interior)) {
                meets = true;
                ++s.interior_weights;
            }
        }
        if (meets) ++s.components_per_kappa[c.kappa];
    }
    return s;
}

json BlocksReport::to_json() const
{
    json j;
    j["n"] = n;
    j["window"] = {window.lo, window.hi};
    json sizes = json::object();
    for (const auto& [k, c] : kappa_level_sizes) sizes[std::to_string(k)] = c;
    j["kappa_level_sizes"] = sizes;
    json comps = json::object();
    for (const auto& [k, c] : interior.components_per_kappa) comps[std::to_string(k)] = c;
    j["interior_components_per_kappa"] = comps;
    j["kappa_constant_on_components"] = interior.kappa_constant;
    j["interior_matches_kappa_levels"] = interior.matches_kappa_levels();
    j["block_count"] = block_count;
    j["checks"] = {p_transition.to_json(), sign_tabulated.to_json(), sign_tracked.to_json(),
                   parity_coherent.to_json()};
    return j;
}

BlocksReport blocks_report(int n, const Window& window)
{
    BlocksReport r;
    r.n = n;
    r.window = window;
    auto ws = weights_in_window(n, window);
    for (const auto& w : ws) ++r.kappa_level_sizes[kappa(w)];
    r.interior = summarize_interior(n, window, block_components_oracle(n, window));
    r.block_count = 2 * static_cast<int>(r.interior.components_per_kappa.size());

    for (const auto& lam : ws) {
        const BlockLabel from = block_of(lam, 0);
        for (int i = window.lo - 2 * n; i <= window.hi + 2; ++i) {
            auto t = theta_proj(i, lam);
            if (!t) continue;
            const BlockLabel to = block_of(t->weight, t->parity);
            json where = {{"lambda", lam.coords()}, {"i", i}, {"mu", t->weight.coords()}, {"parity", t->parity},
                          {"from", {from.p, from.plus ? "+" : "-"}}, {"to", {to.p, to.plus ? "+" : "-"}}};
            auto tab = block_action(i, from, n);
            auto trk = block_action_tracked(i, from, n);
            r.p_transition.expect(tab && tab->p == to.p, where);
            r.sign_tabulated.expect(tab && *tab == to, where);
            r.sign_tracked.expect(trk && *trk == to, where);

            GVector image = theta_full(i, proj_to_delta_tracked(lam));
            bool coherent = true;
            for (const auto& [l, c] : image.terms())
                if (((l.parity + q_parity(l.weight)) & 1) != ((t->parity + q_parity(t->weight)) & 1))
                    coherent = false;
            r.parity_coherent.expect(coherent, where);
        }
    }
    return r;
}

}  // namespace pkit

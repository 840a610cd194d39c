#include "pkit/arrows.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pkit {

int g(const Weight& w, int i) { return w.has_ball(i) ? 1 : -1; }

int r_plus(const Weight& w, int i, int j)
{
    if (j >= i) throw std::invalid_argument("r_plus needs j < i");
    int s = 0;
    for (int t = j; t <= i - 1; ++t) s += g(w, t);
    return s;
}

int r_minus(const Weight& w, int i, int j)
{
    if (j >= i) throw std::invalid_argument("r_minus needs j < i");
    int s = 0;
    for (int t = j + 1; t <= i; ++t) s -= g(w, t);
    return s;
}

ArrowDiagram build_arrows(const Weight& w)
{
    ArrowDiagram a{w, {}, {}};
    const int n = w.n();
    const auto& b = w.balls();
    for (int i : b) {
        std::vector<int> targets;
        int r = 0;
        for (int j = i - 1;; --j) {
            r += g(w, j);
            if (r < 0) break;
            if (r == 0) targets.push_back(j);
        }
        std::reverse(targets.begin(), targets.end());
        if (!targets.empty() && i - targets.front() > 2 * n)
            throw std::logic_error("solid arrow longer than 2n");
        a.solid[i] = std::move(targets);
    }
    const int top = b.front();
    for (int j = b.back() - 2 * n - 1; j < top; ++j) {
        if (w.has_ball(j)) continue;
        std::vector<int> targets;
        int r = 0;
        for (int i = j + 1; i <= top; ++i) {
            r -= g(w, i);
            if (r < 0) break;
            if (r == 0) targets.push_back(i);
        }
        if (targets.empty()) continue;
        if (targets.back() - j > 2 * n)
            throw std::logic_error("dashed arrow longer than 2n");
        a.dashed[j] = std::move(targets);
    }
    return a;
}

std::vector<Weight> up_set(const ArrowDiagram& a)
{
    const auto& b = a.base.balls();
    std::vector<Weight> out;
    std::vector<int> cur(b.size());
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == b.size()) {
            out.push_back(Weight::from_balls(cur));
            return;
        }
        cur[k] = b[k];
        rec(k + 1);
        for (int j : a.solid.at(b[k])) {
            cur[k] = j;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> down_set(const ArrowDiagram& a)
{
    std::vector<std::pair<int, const std::vector<int>*>> slots;
    for (const auto& [j, ts] : a.dashed) slots.emplace_back(j, &ts);
    std::vector<Weight> out;
    std::function<void(size_t, const Weight&)> rec = [&](size_t k, const Weight& cur) {
        if (k == slots.size()) {
            out.push_back(cur);
            return;
        }
        rec(k + 1, cur);
        for (int i : *slots[k].second) rec(k + 1, move_ball(cur, i, slots[k].first));
    };
    rec(0, a.base);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> up_set(const Weight& w) { return up_set(build_arrows(w)); }
std::vector<Weight> down_set(const Weight& w) { return down_set(build_arrows(w)); }

bool member_up(const ArrowDiagram& a, const Weight& mu)
{
    check_rank(a.base, mu);
    for (const auto& [i, targets] : a.solid) {
        int s = mu.has_ball(i);
        for (int j : targets) s += mu.has_ball(j);
        if (s != 1) return false;
    }
    return true;
}

bool member_down(const ArrowDiagram& a, const Weight& mu)
{
    check_rank(a.base, mu);
    const Weight& lambda = a.base;
    auto constraint = [&](int j) {
        int s = 1 - static_cast<int>(mu.has_ball(j));
        auto it = a.dashed.find(j);
        if (it != a.dashed.end())
            for (int i : it->second) s += 1 - static_cast<int>(mu.has_ball(i));
        return s == 1;
    };
    for (const auto& [j, targets] : a.dashed)
        if (!constraint(j)) return false;
    for (int p : mu.balls())
        if (!lambda.has_ball(p) && !constraint(p)) return false;
    return true;
}

bool member_up(const Weight& lambda, const Weight& mu) { return member_up(build_arrows(lambda), mu); }
bool member_down(const Weight& lambda, const Weight& mu) { return member_down(build_arrows(lambda), mu); }

bool ArmsLegs::balanced() const
{
    if (arms.size() != legs.size()) return false;
    for (size_t i = 0; i < arms.size(); ++i)
        if (arms[i] + 1 != legs[i]) return false;
    return true;
}

ArmsLegs arm_leg(const Weight& w)
{
    auto mu = w.coords();
    for (int x : mu)
        if (x < 0) throw std::invalid_argument("arm_leg needs nonnegative coordinates");
    const int n = w.n();
    ArmsLegs r;
    for (int i = 1; i <= n && mu[i - 1] - i + 1 > 0; ++i) r.arms.push_back(mu[i - 1] - i + 1);
    for (int i = 1;; ++i) {
        int conj = 0;
        for (int x : mu) conj += x >= i;
        if (conj - i + 1 <= 0) break;
        r.legs.push_back(conj - i + 1);
    }
    return r;
}

// B = {mu_i - i + 1}; the characterization asks that no two elements of B sum to zero.
bool arm_leg_sum_predicate(const Weight& w)
{
    auto mu = w.coords();
    const int n = w.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if ((mu[i - 1] - i + 1) + (mu[j - 1] - j + 1) == 0) return false;
    return true;
}

std::string render_arrows(const ArrowDiagram& a, const Window& window)
{
    std::string out = render_ascii(weight_to_diagram(a.base), window);
    if (window.empty()) return out;
    int width = 1;
    for (int i = window.lo; i <= window.hi; ++i)
        width = std::max(width, static_cast<int>(std::to_string(i).size()));
    ++width;
    auto col = [&](int pos) { return (pos - window.lo) * width + width - 1; };
    const int cols = window.width() * width;

    struct Arc {
        int from, to;
        bool dashed;
    };
    std::vector<Arc> arcs;
    for (const auto& [i, ts] : a.solid)
        for (int j : ts) arcs.push_back({i, j, false});
    for (const auto& [j, ts] : a.dashed)
        for (int i : ts) arcs.push_back({j, i, true});
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        return std::abs(x.from - x.to) < std::abs(y.from - y.to);
    });

    for (const Arc& arc : arcs) {
        int lo = std::min(arc.from, arc.to), hi = std::max(arc.from, arc.to);
        if (!window.contains(lo) || !window.contains(hi)) continue;
        std::vector<std::string> row(cols, " ");
        for (int c = col(lo); c <= col(hi); ++c) row[c] = arc.dashed ? "┄" : "─";
        row[col(lo)] = "╰";
        row[col(hi)] = "╯";
        // arrowhead marks the target
        row[col(arc.to)] = arc.dashed ? "▷" : "◁";
        std::string line;
        for (auto& s : row) line += s;
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace pkit

#include "pkit/structure.hpp"

#include <stdexcept>

#include "pkit/arrows.hpp"

namespace pkit {

Weight dagger(const Weight& lambda)
{
    const int n = lambda.n();
    Weight cur = lambda;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            // balls()[k] is the (k+1)-th ball counted from the right
            int pa = cur.balls()[a], pb = cur.balls()[b];
            if (cur.has_ball(pa + 1) || cur.has_ball(pb + 1)) continue;
            cur = move_ball(move_ball(cur, pa, pa + 1), pb, pb + 1);
        }
    return cur;
}

Sharp sharp(const Weight& lambda)
{
    const int n = lambda.n();
    auto b = dagger(lambda).balls();
    for (int& p : b) p = (n - 1) - p;
    Weight s = Weight::from_balls(b);
    long long sum = s.total() + lambda.total();
    if (sum % 2 != 0) throw std::logic_error("odd |lambda#| + |lambda|");
    return {s, static_cast<int>(((sum / 2) % 2 + 2) % 2)};
}

Weight dual_kac(Family family, const Weight& lambda)
{
    const int n = lambda.n();
    Weight w = neg_w0(lambda);
    if (family == Family::Delta) return shift(w, -(n + 1));
    if (family == Family::Nabla) return shift(w, 1 - n);
    throw std::invalid_argument("dual_kac expects Delta or Nabla");
}

Weight max_solid_slide(const Weight& tau)
{
    auto a = build_arrows(tau);
    auto b = tau.balls();
    for (int& p : b) {
        const auto& ts = a.solid.at(p);
        if (!ts.empty()) p = ts.front();
    }
    return Weight::from_balls(b);
}

Weight max_dashed_slide(const Weight& tau)
{
    auto a = build_arrows(tau);
    auto b = tau.balls();
    for (const auto& [j, ts] : a.dashed)
        for (int& p : b)
            if (p == ts.back()) p = j;
    return Weight::from_balls(b);
}

namespace {

template <class F>
Weight unique_preimage(const Weight& lambda, F slide, const char* what)
{
    std::optional<Weight> found;
    for (const auto& tau : search_box_above(lambda, 2 * lambda.n())) {
        if (slide(tau) != lambda) continue;
        if (found) throw std::logic_error(std::string(what) + ": preimage is not unique for " + to_string(lambda));
        found = tau;
    }
    if (!found) throw std::logic_error(std::string(what) + ": no preimage for " + to_string(lambda));
    return *found;
}

}  // namespace

Weight cosocle_nabla(const Weight& lambda)
{
    return unique_preimage(lambda, [](const Weight& t) { return max_solid_slide(t); }, "cosocle");
}

Weight socle_delta(const Weight& lambda)
{
    return unique_preimage(lambda, [](const Weight& t) { return max_dashed_slide(t); }, "socle");
}

Weight cosocle_nabla_closed_form(const Weight& lambda)
{
    const int n = lambda.n();
    return shift(sharp(shift(neg_w0(lambda), -(n + 1))).weight, -2);
}

}  // namespace pkit

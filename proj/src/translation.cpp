#include "pkit/translation.hpp"

#include <algorithm>
#include <stdexcept>

#include "pkit/arrows.hpp"

namespace pkit {

using nlohmann::json;

namespace {

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

}  // namespace

GVector theta_delta(int k, const Weight& w, int parity)
{
    GVector out(Family::Delta);
    bool a = w.has_ball(k - 2), b = w.has_ball(k - 1), c = w.has_ball(k);
    if (b) return out;
    if (c) out.add({Family::Delta, move_ball(w, k, k - 1), (parity + 1) & 1}, 1);
    if (a) out.add({Family::Delta, move_ball(w, k - 2, k - 1), parity & 1}, 1);
    return out;
}

// The k -> k-1 move carries Pi, the k -> k+1 move does not; this matches the
// filtration of Theta'_k applied to a thin Kac module for all three patterns.
GVector theta_nabla(int k, const Weight& w, int parity)
{
    GVector out(Family::Nabla);
    if (!w.has_ball(k)) return out;
    if (!w.has_ball(k - 1)) out.add({Family::Nabla, move_ball(w, k, k - 1), (parity + 1) & 1}, 1);
    if (!w.has_ball(k + 1)) out.add({Family::Nabla, move_ball(w, k, k + 1), parity & 1}, 1);
    return out;
}

GVector theta_prime(int k, const GVector& v)
{
    if (v.is_zero()) return v;
    Family f = *v.family();
    if (f != Family::Delta && f != Family::Nabla)
        throw std::invalid_argument("theta_prime acts on Delta or Nabla vectors");
    GVector out(f);
    for (const auto& [l, c] : v.terms()) {
        GVector t = f == Family::Delta ? theta_delta(k, l.weight, l.parity) : theta_nabla(k, l.weight, l.parity);
        for (const auto& [l2, c2] : t.terms()) out.add(l2, c * c2);
    }
    return out;
}

GVector theta_full(int k, const GVector& v) { return theta_prime(k, v).parity_shift(mod2(k)); }

std::optional<Weight> theta_proj_weight(int i, const Weight& lambda)
{
    bool a = lambda.has_ball(i - 2), b = lambda.has_ball(i - 1);
    if (a && !b) return move_ball(lambda, i - 2, i - 1);
    if (!a && b) return std::nullopt;
    if (a && b) {
        // shortest solid arrow out of i-1
        int r = 0;
        for (int j = i - 2;; --j) {
            r += g(lambda, j);
            if (r < 0) throw std::logic_error("ball i-1 carries no solid arrow");
            if (r == 0) return move_ball(lambda, i - 2, j);
        }
    }
    int r = 0;
    for (int j = i - 1; j <= lambda.balls().front(); ++j) {
        r -= g(lambda, j);
        if (j >= i && r == 0) return move_ball(lambda, j, i - 1);
        if (r < 0) break;
    }
    return std::nullopt;
}

GVector proj_to_delta_tracked(const Weight& lambda, int parity)
{
    GVector v(Family::Delta);
    const int ql = q_parity(lambda);
    for (const auto& mu : up_set(lambda)) v.add({Family::Delta, mu, (parity + ql + q_parity(mu)) & 1}, 1);
    return v;
}

std::optional<ProjTranslate> theta_proj(int i, const Weight& lambda)
{
    auto mu = theta_proj_weight(i, lambda);
    if (!mu) return std::nullopt;
    GVector image = theta_full(i, proj_to_delta_tracked(lambda));
    for (const auto& [l, c] : image.terms())
        if (l.weight == *mu) return ProjTranslate{*mu, l.parity};
    throw std::logic_error("translated projective misses its top Kac module");
}

GVector theta_simple(int i, const Weight& lambda, const std::optional<Window>& window)
{
    GVector out(Family::Simple);
    if (lambda.has_ball(i - 1) || !lambda.has_ball(i)) return out;
    const int n = lambda.n();
    std::vector<Weight> candidates;
    candidates.push_back(move_ball(lambda, i, i - 1));
    for (int j : lambda.balls())
        if (j < i - 1 && j >= i - 1 - 2 * n) candidates.push_back(move_ball(lambda, j, i - 1));
    for (int p = i + 1; p <= i + 2 * n + 1; ++p)
        if (!lambda.has_ball(p)) candidates.push_back(move_ball(lambda, i, p));
    if (window) {
        if (!window->contains(i - 1 - 2 * n) || !window->contains(i + 2 * n + 1))
            throw std::out_of_range("window too small for translated simple search");
    }
    for (const auto& mu : candidates) {
        auto t = theta_proj_weight(i + 1, mu);
        if (t && *t == lambda) out.add({Family::Simple, mu, 0}, 1);
    }
    return out;
}

void WedgeVector::add(const Tuple& t, const BigInt& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WedgeVector WedgeVector::operator+(const WedgeVector& o) const
{
    WedgeVector r = *this;
    for (const auto& [t, c] : o.terms_) r.add(t, c);
    return r;
}

WedgeVector wedge_map(const GVector& v)
{
    if (v.family() && *v.family() != Family::Delta && *v.family() != Family::Nabla)
        throw std::invalid_argument("wedge_map acts on Delta or Nabla vectors");
    WedgeVector w;
    for (const auto& [l, c] : v.terms()) w.add(l.weight.balls(), c);
    return w;
}

namespace {

bool contains(const Tuple& t, int x) { return std::find(t.begin(), t.end(), x) != t.end(); }

Tuple replace(Tuple t, int from, int to)
{
    *std::find(t.begin(), t.end(), from) = to;
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

}  // namespace

WedgeVector ef_op(int k, char which, const WedgeVector& w)
{
    int from = which == 'e' ? k : k - 1;
    int to = which == 'e' ? k - 1 : k;
    if (which != 'e' && which != 'f') throw std::invalid_argument("ef_op expects 'e' or 'f'");
    WedgeVector out;
    for (const auto& [t, c] : w.terms())
        if (contains(t, from) && !contains(t, to)) out.add(replace(t, from, to), c);
    return out;
}

WedgeVector delta_side_op(int k, const WedgeVector& w) { return ef_op(k, 'e', w) + ef_op(k - 1, 'f', w); }
WedgeVector nabla_side_op(int k, const WedgeVector& w) { return ef_op(k, 'e', w) + ef_op(k + 1, 'f', w); }

namespace {

json weight_json(const Weight& w) { return w.coords(); }

template <class Op, class V>
void check_tl_relations(CheckReport& sq, CheckReport& braid, CheckReport& far, const V& v,
                        const std::vector<int>& ks, Op op, const json& where)
{
    for (int k : ks) {
        V tk = op(k, v);
        sq.expect(op(k, tk) == V{}, {{"at", where}, {"k", k}});
        for (int d : {-1, 1}) {
            V lhs = op(k, op(k + d, tk));
            braid.expect(lhs == tk, {{"at", where}, {"k", k}, {"j", k + d}});
        }
        for (int j : ks) {
            if (std::abs(j - k) <= 1 || j < k) continue;
            far.expect(op(k, op(j, v)) == op(j, tk), {{"at", where}, {"k", k}, {"j", j}});
        }
    }
}

}  // namespace

std::vector<CheckReport> verify_tl(int n, const Window& window)
{
    std::vector<CheckReport> reports;
    auto make = [&](const std::string& name) {
        reports.emplace_back(name);
        return reports.size() - 1;
    };
    size_t d_sq = make("delta: theta'_k^2 = 0"), d_br = make("delta: theta'_k theta'_{k+-1} theta'_k = theta'_k"),
           d_far = make("delta: far commutation");
    size_t n_sq = make("nabla: theta'_k^2 = 0"), n_br = make("nabla: theta'_k theta'_{k+-1} theta'_k = theta'_k"),
           n_far = make("nabla: far commutation");
    size_t w_sq = make("wedge: (e_k+f_{k-1})^2 = 0"), w_br = make("wedge: braid-type TL relation"),
           w_far = make("wedge: far commutation");
    size_t i_d = make("intertwining: Phi theta'_k = (e_k + f_{k-1}) Phi");
    size_t i_n = make("intertwining: Phi^v theta'_k = (e_k + f_{k+1}) Phi^v");
    size_t adj = make("adjunction: <theta'_k a, b> = <a, theta'_{k-1} b>");

    std::vector<int> ks;
    for (int k = window.lo - 1; k <= window.hi + 2; ++k) ks.push_back(k);

    auto red = [](int k, const GVector& v) { return theta_prime(k, v).reduced(); };

    for (const auto& lam : weights_in_window(n, window)) {
        json where = weight_json(lam);
        GVector d = GVector::basis(Family::Delta, lam), nb = GVector::basis(Family::Nabla, lam);
        check_tl_relations(reports[d_sq], reports[d_br], reports[d_far], d, ks, red, where);
        check_tl_relations(reports[n_sq], reports[n_br], reports[n_far], nb, ks, red, where);
        WedgeVector wv;
        wv.add(lam.balls(), 1);
        check_tl_relations(reports[w_sq], reports[w_br], reports[w_far], wv, ks,
                           [](int k, const WedgeVector& x) { return delta_side_op(k, x); }, where);

        for (int k : ks) {
            reports[i_d].expect(wedge_map(theta_prime(k, d)) == delta_side_op(k, wv), {{"at", where}, {"k", k}});
            reports[i_n].expect(wedge_map(theta_prime(k, nb)) == nabla_side_op(k, wv), {{"at", where}, {"k", k}});

            // <theta'_k Delta(lam), Nabla(mu)> against <Delta(lam), theta'_{k-1} Nabla(mu)>:
            // both sides vanish unless mu is a term of the left image or differs from lam by one ball step.
            GVector left = theta_prime(k, d);
            std::vector<Weight> mus;
            for (const auto& [l, c] : left.terms()) mus.push_back(l.weight);
            for (int b : lam.balls())
                for (int s : {-1, 1})
                    if (!lam.has_ball(b + s)) mus.push_back(move_ball(lam, b, b + s));
            for (const auto& mu : mus) {
                GVector nm = GVector::basis(Family::Nabla, mu);
                reports[adj].expect(pairing(left, nm) == pairing(d, theta_prime(k - 1, nm)),
                                    {{"at", where}, {"mu", weight_json(mu)}, {"k", k}});
            }
        }
    }
    return reports;
}

std::optional<BlockLabel> block_action(int i, const BlockLabel& label, int n)
{
    int p2 = mod2(i) ? label.p + 2 : label.p - 2;
    if (std::abs(p2) > n) return std::nullopt;
    bool flip = mod2((n - label.p) / 2);
    return BlockLabel{p2, flip ? !label.plus : label.plus};
}

std::optional<BlockLabel> block_action_tracked(int i, const BlockLabel& label, int n)
{
    int p2 = mod2(i) ? label.p + 2 : label.p - 2;
    if (std::abs(p2) > n) return std::nullopt;
    // |lambda| mod 2 is constant on the block: (n - p)/2 + n(n-1)/2.
    bool flip = mod2((n - label.p) / 2 + n * (n - 1) / 2 + i);
    return BlockLabel{p2, flip ? !label.plus : label.plus};
}

}  // namespace pkit

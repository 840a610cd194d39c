#include "pkit/grothendieck.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pkit/arrows.hpp"

namespace pkit {

std::string family_name(Family f)
{
    switch (f) {
    case Family::Delta: return "Delta";
    case Family::Nabla: return "Nabla";
    case Family::Simple: return "Simple";
    case Family::Proj: return "Proj";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    if (s == "Delta") return Family::Delta;
    if (s == "Nabla") return Family::Nabla;
    if (s == "Simple") return Family::Simple;
    if (s == "Proj") return Family::Proj;
    throw std::invalid_argument("unknown family " + s);
}

GVector GVector::basis(Family f, const Weight& w, int parity)
{
    GVector v(f);
    v.add({f, w, parity & 1}, 1);
    return v;
}

void GVector::absorb_family(Family f)
{
    if (family_ && *family_ != f) throw std::invalid_argument("mixed families in one vector");
    family_ = f;
}

void GVector::add(const BasisLabel& label, const BigInt& c)
{
    absorb_family(label.family);
    if (!terms_.empty() && terms_.begin()->first.weight.n() != label.weight.n())
        throw std::invalid_argument("rank mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GVector& GVector::operator+=(const GVector& other)
{
    if (other.family_) absorb_family(*other.family_);
    for (const auto& [l, c] : other.terms_) add(l, c);
    return *this;
}

GVector GVector::operator+(const GVector& other) const
{
    GVector r = *this;
    r += other;
    return r;
}

GVector GVector::operator-(const GVector& other) const
{
    GVector r = *this;
    if (other.family_) r.absorb_family(*other.family_);
    for (const auto& [l, c] : other.terms_) r.add(l, -c);
    return r;
}

GVector GVector::parity_shift(int k) const
{
    GVector r;
    r.family_ = family_;
    for (const auto& [l, c] : terms_) {
        BasisLabel m = l;
        m.parity = (l.parity + k) & 1;
        r.add(m, c);
    }
    return r;
}

GVector GVector::reduced() const
{
    GVector r;
    r.family_ = family_;
    for (const auto& [l, c] : terms_) {
        BasisLabel m = l;
        m.parity = 0;
        r.add(m, c);
    }
    return r;
}

BigInt GVector::coeff(const Weight& w) const
{
    BigInt s = 0;
    for (const auto& [l, c] : terms_)
        if (l.weight == w) s += c;
    return s;
}

bool GVector::operator==(const GVector& other) const
{
    if (terms_.empty() && other.terms_.empty()) return true;
    return family_ == other.family_ && terms_ == other.terms_;
}

GVector proj_to_delta(const Weight& lambda)
{
    GVector v(Family::Delta);
    for (const auto& mu : up_set(lambda)) v.add({Family::Delta, mu, 0}, 1);
    return v;
}

GVector proj_to_nabla(const Weight& lambda)
{
    GVector v(Family::Nabla);
    for (const auto& mu : down_set(lambda)) v.add({Family::Nabla, shift(mu, 2), 0}, 1);
    return v;
}

namespace {

// Strictly decreasing supports with c_k in [c_mu_k + lo, c_mu_k + hi].
std::vector<Weight> search_box(const Weight& mu, int lo, int hi)
{
    const auto& c = mu.balls();
    const int n = mu.n();
    std::vector<Weight> out;
    std::vector<int> cur(n);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            out.push_back(Weight::from_balls(cur));
            return;
        }
        int top = c[k] + hi;
        if (k > 0) top = std::min(top, cur[k - 1] - 1);
        for (int p = c[k] + lo; p <= top; ++p) {
            cur[k] = p;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Weight> search_box_above(const Weight& mu, int radius) { return search_box(mu, 0, radius); }
std::vector<Weight> search_box_below(const Weight& mu, int radius) { return search_box(mu, -radius, 0); }

namespace {

std::vector<Weight> inverse_candidates(const Weight& mu, const std::optional<Window>& window,
                                       std::optional<int> radius)
{
    int r = radius.value_or(2 * mu.n());
    if (window) {
        if (!window->contains(mu.balls().back()) || !window->contains(mu.balls().front() + r))
            throw std::out_of_range("window too small for the inverse search box");
    }
    return search_box_above(mu, r);
}

}  // namespace

// lambda with mu in down(lambda) is obtained from mu by sliding balls right
// along reversed dashed arrows, so c_lambda >= c_mu pointwise, within 2n.
GVector delta_to_simple(const Weight& mu, const std::optional<Window>& window, std::optional<int> radius)
{
    GVector v(Family::Simple);
    for (const auto& lambda : inverse_candidates(mu, window, radius))
        if (member_down(lambda, mu)) v.add({Family::Simple, lambda, 0}, 1);
    return v;
}

GVector nabla_to_simple(const Weight& mu, const std::optional<Window>& window, std::optional<int> radius)
{
    GVector v(Family::Simple);
    for (const auto& lambda : inverse_candidates(mu, window, radius))
        if (member_up(lambda, mu)) v.add({Family::Simple, lambda, 0}, 1);
    return v;
}

int hom_dim(const Weight& lambda, const Weight& mu)
{
    check_rank(lambda, mu);
    auto down = build_arrows(lambda);
    int count = 0;
    for (const auto& nu : up_set(mu))
        if (member_down(down, nu)) ++count;
    if (count > 1)
        throw std::logic_error("hom space of dimension > 1 between " + to_string(lambda) + " and " +
                               to_string(mu));
    return count;
}

BigInt pairing(const GVector& a, const GVector& b)
{
    if ((a.family() && *a.family() != Family::Delta) || (b.family() && *b.family() != Family::Nabla))
        throw std::invalid_argument("pairing expects a Delta vector and a Nabla vector");
    auto ra = a.reduced(), rb = b.reduced();
    BigInt s = 0;
    for (const auto& [l, c] : ra.terms()) {
        auto it = rb.terms().find({Family::Nabla, l.weight, 0});
        if (it != rb.terms().end()) s += c * it->second;
    }
    return s;
}

std::pair<Weight, int> injective_hull(const Weight& lambda)
{
    return {shift(lambda, -2), lambda.n() % 2};
}

bool ext_possible(const Weight& lambda, const Weight& mu)
{
    return member_down(mu, lambda) || member_up(lambda, mu);
}

}  // namespace pkit

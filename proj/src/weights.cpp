#include "pkit/weights.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pkit {

Window default_window(int n) { return {-4 * n, 4 * n}; }

Window parse_window(const std::string& text)
{
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("window must look like lo..hi: " + text);
    Window w;
    try {
        size_t used = 0;
        w.lo = std::stoi(text.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument(text);
        std::string rest = text.substr(sep + 2);
        w.hi = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad window: " + text);
    }
    if (w.lo >= w.hi) throw std::invalid_argument("window needs lo < hi: " + text);
    return w;
}

Weight Weight::from_coords(const std::vector<int>& coords)
{
    if (coords.empty()) throw std::invalid_argument("rank must be positive");
    int n = static_cast<int>(coords.size());
    std::vector<int> balls(n);
    for (int i = 0; i < n; ++i) {
        if (i > 0 && coords[i] > coords[i - 1])
            throw std::invalid_argument("weight is not dominant");
        balls[i] = coords[i] + n - 1 - i;
    }
    return Weight(std::move(balls));
}

Weight Weight::from_balls(std::vector<int> balls)
{
    if (balls.empty()) throw std::invalid_argument("rank must be positive");
    std::sort(balls.begin(), balls.end(), std::greater<>());
    if (std::adjacent_find(balls.begin(), balls.end()) != balls.end())
        throw std::invalid_argument("ball positions must be distinct");
    return Weight(std::move(balls));
}

Weight Weight::zero(int n) { return from_coords(std::vector<int>(n, 0)); }

Weight Weight::rho(int n)
{
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = n - 1 - i;
    return from_coords(c);
}

std::vector<int> Weight::coords() const
{
    std::vector<int> c(balls_.size());
    for (int i = 0; i < n(); ++i) c[i] = coord(i);
    return c;
}

long long Weight::total() const
{
    long long s = 0;
    for (int i = 0; i < n(); ++i) s += coord(i);
    return s;
}

bool Weight::has_ball(int pos) const
{
    for (int b : balls_) {
        if (b == pos) return true;
        if (b < pos) return false;
    }
    return false;
}

int WeightDiagram::f(int pos) const
{
    return std::find(balls.begin(), balls.end(), pos) != balls.end() ? 1 : 0;
}

WeightDiagram weight_to_diagram(const Weight& w) { return {w.n(), w.balls()}; }

Weight diagram_to_weight(const WeightDiagram& d)
{
    if (static_cast<int>(d.balls.size()) != d.n)
        throw std::invalid_argument("diagram must carry exactly n balls");
    return Weight::from_balls(d.balls);
}

void check_rank(const Weight& a, const Weight& b)
{
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch");
}

bool leq(const Weight& a, const Weight& b)
{
    check_rank(a, b);
    for (int i = 0; i < a.n(); ++i)
        if (b.balls()[i] > a.balls()[i]) return false;
    return true;
}

bool is_typical(const Weight& w)
{
    const auto& c = w.balls();
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] == c[i] + 1) return false;
    return true;
}

Weight shift(const Weight& w, int k)
{
    auto b = w.balls();
    for (int& x : b) x += k;
    return Weight::from_balls(std::move(b));
}

Weight neg_w0(const Weight& w)
{
    auto c = w.coords();
    std::reverse(c.begin(), c.end());
    for (int& x : c) x = -x;
    return Weight::from_coords(c);
}

Weight move_ball(const Weight& w, int from, int to)
{
    auto b = w.balls();
    auto it = std::find(b.begin(), b.end(), from);
    if (it == b.end() || w.has_ball(to))
        throw std::logic_error("illegal ball move");
    *it = to;
    return Weight::from_balls(std::move(b));
}

BigInt gl_dim(const Weight& w)
{
    const auto& c = w.balls();
    BigInt num = 1, den = 1;
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) {
            num *= c[i] - c[j];
            den *= j - i;
        }
    if (num % den != 0) throw std::logic_error("Weyl dimension is not integral");
    return num / den;
}

std::pair<BigInt, BigInt> kac_dims(const Weight& w)
{
    int n = w.n();
    BigInt d = gl_dim(w);
    BigInt thin = d << (n * (n - 1) / 2);
    BigInt thick = d << (n * (n + 1) / 2);
    return {thin, thick};
}

int kappa(const Weight& w)
{
    int k = 0;
    for (int b : w.balls()) k += (b % 2 == 0) ? 1 : -1;
    return k;
}

int q_parity(long long total)
{
    long long r = ((total % 4) + 4) % 4;
    return r <= 1 ? 0 : 1;
}

int q_parity(const Weight& w) { return q_parity(w.total()); }

std::string render_ascii(const WeightDiagram& d, const Window& window)
{
    if (window.empty()) return "";
    int width = 1;
    for (int i = window.lo; i <= window.hi; ++i)
        width = std::max(width, static_cast<int>(std::to_string(i).size()));
    ++width;
    std::string top, bottom;
    for (int i = window.lo; i <= window.hi; ++i) {
        top += std::string(width - 1, ' ') + (d.f(i) ? "●" : "○");
        std::string label = std::to_string(i);
        bottom += std::string(width - label.size(), ' ') + label;
    }
    return top + "\n" + bottom + "\n";
}

std::string to_string(const Weight& w)
{
    std::ostringstream os;
    os << '(';
    auto c = w.coords();
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

std::vector<Weight> weights_in_window(int n, const Window& window)
{
    std::vector<Weight> out;
    if (n <= 0 || window.width() < n) return out;
    std::vector<int> balls(n);
    std::function<void(int, int)> rec = [&](int idx, int upper) {
        if (idx == n) {
            out.push_back(Weight::from_balls(balls));
            return;
        }
        for (int p = upper; p >= window.lo + (n - 1 - idx); --p) {
            balls[idx] = p;
            rec(idx + 1, p - 1);
        }
    };
    rec(0, window.hi);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pkit

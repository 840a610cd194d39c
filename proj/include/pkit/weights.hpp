#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pkit {

using BigInt = boost::multiprecision::cpp_int;

// Closed integer interval [lo, hi] of positions on the weight line.
struct Window {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    int width() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    bool operator==(const Window&) const = default;
};

Window default_window(int n);
Window parse_window(const std::string& text);  // "lo..hi"

// Dominant integral weight of p(n), stored by its rho-shifted support
// c = {lambda_i + n - i}, strictly decreasing.
class Weight {
public:
    Weight() = default;

    static Weight from_coords(const std::vector<int>& coords);
    static Weight from_balls(std::vector<int> balls);
    static Weight zero(int n);
    static Weight rho(int n);

    int n() const { return static_cast<int>(balls_.size()); }
    const std::vector<int>& balls() const { return balls_; }
    std::vector<int> coords() const;
    int coord(int i) const { return balls_[i] - (n() - 1 - i); }  // 0-based i
    long long total() const;                                       // |lambda|
    bool has_ball(int pos) const;

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    explicit Weight(std::vector<int> balls) : balls_(std::move(balls)) {}
    std::vector<int> balls_;
};

struct WeightDiagram {
    int n = 0;
    std::vector<int> balls;

    int f(int pos) const;
    bool operator==(const WeightDiagram&) const = default;
};

WeightDiagram weight_to_diagram(const Weight& w);
Weight diagram_to_weight(const WeightDiagram& d);

void check_rank(const Weight& a, const Weight& b);

bool leq(const Weight& a, const Weight& b);
bool is_typical(const Weight& w);
Weight shift(const Weight& w, int k);
Weight neg_w0(const Weight& w);  // -w0(lambda) = (-lambda_n, ..., -lambda_1)
Weight move_ball(const Weight& w, int from, int to);

BigInt gl_dim(const Weight& w);
std::pair<BigInt, BigInt> kac_dims(const Weight& w);  // (thin, thick)

int kappa(const Weight& w);
int q_parity(long long total);
int q_parity(const Weight& w);

std::string render_ascii(const WeightDiagram& d, const Window& window);
std::string to_string(const Weight& w);

// All dominant weights of rank n with every ball inside the window.
std::vector<Weight> weights_in_window(int n, const Window& window);

}  // namespace pkit

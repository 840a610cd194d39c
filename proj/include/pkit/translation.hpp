#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pkit/grothendieck.hpp"
#include "pkit/report.hpp"
#include "pkit/weights.hpp"

namespace pkit {

// theta'_k on a single Kac module; the *_full variants apply theta_k = Pi^k theta'_k.
GVector theta_delta(int k, const Weight& w, int parity = 0);
GVector theta_nabla(int k, const Weight& w, int parity = 0);

// Extends linearly over a Delta or Nabla vector.
GVector theta_prime(int k, const GVector& v);
GVector theta_full(int k, const GVector& v);

struct ProjTranslate {
    Weight weight;
    int parity = 0;  // relative to an even P(lambda)
};

// Theta_i P(lambda): the target weight from the simple/hard move tables, or nothing.
std::optional<Weight> theta_proj_weight(int i, const Weight& lambda);
std::optional<ProjTranslate> theta_proj(int i, const Weight& lambda);

// Delta-filtration of P(lambda) with parities fixed by q, as used for parity tracking.
GVector proj_to_delta_tracked(const Weight& lambda, int parity = 0);

GVector theta_simple(int i, const Weight& lambda, const std::optional<Window>& window = std::nullopt);

using Tuple = std::vector<int>;  // strictly decreasing

class WedgeVector {
public:
    void add(const Tuple& t, const BigInt& c);
    const std::map<Tuple, BigInt>& terms() const { return terms_; }
    bool operator==(const WedgeVector&) const = default;
    WedgeVector operator+(const WedgeVector& o) const;

private:
    std::map<Tuple, BigInt> terms_;
};

WedgeVector wedge_map(const GVector& v);
WedgeVector ef_op(int k, char which, const WedgeVector& w);
WedgeVector delta_side_op(int k, const WedgeVector& w);  // e_k + f_{k-1}
WedgeVector nabla_side_op(int k, const WedgeVector& w);  // e_k + f_{k+1}

std::vector<CheckReport> verify_tl(int n, const Window& window);

struct BlockLabel {
    int p = 0;
    bool plus = true;

    auto operator<=>(const BlockLabel&) const = default;
    bool operator==(const BlockLabel&) const = default;
};

// Block transition of Theta_i by the closed-form table: p moves by +-2, sign flips iff (n-p)/2 is odd.
// Returns nothing when Theta_i kills the block.
std::optional<BlockLabel> block_action(int i, const BlockLabel& label, int n);

// Block transition forced by Theta_i = Pi^i Theta'_i and the parities of the
// weight vectors of V (see README, "Block signs").
std::optional<BlockLabel> block_action_tracked(int i, const BlockLabel& label, int n);

}  // namespace pkit

#pragma once

#include <map>
#include <string>
#include <vector>

#include "pkit/weights.hpp"

namespace pkit {

int g(const Weight& w, int i);
int r_plus(const Weight& w, int i, int j);
int r_minus(const Weight& w, int i, int j);

struct ArrowDiagram {
    Weight base;
    std::map<int, std::vector<int>> solid;   // ball i -> targets j < i, increasing
    std::map<int, std::vector<int>> dashed;  // empty j -> balls i > j, increasing; only nonempty sets
};

ArrowDiagram build_arrows(const Weight& w);

std::vector<Weight> up_set(const Weight& w);
std::vector<Weight> down_set(const Weight& w);
std::vector<Weight> up_set(const ArrowDiagram& a);
std::vector<Weight> down_set(const ArrowDiagram& a);

bool member_up(const Weight& lambda, const Weight& mu);
bool member_down(const Weight& lambda, const Weight& mu);
bool member_up(const ArrowDiagram& a, const Weight& mu);
bool member_down(const ArrowDiagram& a, const Weight& mu);

struct ArmsLegs {
    std::vector<int> arms;
    std::vector<int> legs;
    bool balanced() const;  // arm_i + 1 == leg_i for all i
};

ArmsLegs arm_leg(const Weight& w);
bool arm_leg_sum_predicate(const Weight& w);

std::string render_arrows(const ArrowDiagram& a, const Window& window);

}  // namespace pkit

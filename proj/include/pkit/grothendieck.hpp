#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pkit/weights.hpp"

namespace pkit {

enum class Family { Delta, Nabla, Simple, Proj };

std::string family_name(Family f);
Family parse_family(const std::string& s);

struct BasisLabel {
    Family family = Family::Delta;
    Weight weight;
    int parity = 0;

    auto operator<=>(const BasisLabel&) const = default;
    bool operator==(const BasisLabel&) const = default;
};

class GVector {
public:
    GVector() = default;
    explicit GVector(Family f) : family_(f) {}

    static GVector basis(Family f, const Weight& w, int parity = 0);

    std::optional<Family> family() const { return family_; }
    const std::map<BasisLabel, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const BasisLabel& label, const BigInt& c);
    GVector& operator+=(const GVector& other);
    GVector operator+(const GVector& other) const;
    GVector operator-(const GVector& other) const;
    GVector parity_shift(int k = 1) const;

    GVector reduced() const;  // forget parity
    BigInt coeff(const Weight& w) const;  // summed over parities
    bool operator==(const GVector& other) const;

private:
    void absorb_family(Family f);
    std::optional<Family> family_;
    std::map<BasisLabel, BigInt> terms_;
};

GVector proj_to_delta(const Weight& lambda);
GVector proj_to_nabla(const Weight& lambda);

// Box of weights whose rho-shifted support lies pointwise in [c_mu, c_mu + radius].
std::vector<Weight> search_box_above(const Weight& mu, int radius);
std::vector<Weight> search_box_below(const Weight& mu, int radius);

GVector delta_to_simple(const Weight& mu, const std::optional<Window>& window = std::nullopt,
                        std::optional<int> radius = std::nullopt);
GVector nabla_to_simple(const Weight& mu, const std::optional<Window>& window = std::nullopt,
                        std::optional<int> radius = std::nullopt);

int hom_dim(const Weight& lambda, const Weight& mu);
BigInt pairing(const GVector& a, const GVector& b);

std::pair<Weight, int> injective_hull(const Weight& lambda);
bool ext_possible(const Weight& lambda, const Weight& mu);

}  // namespace pkit

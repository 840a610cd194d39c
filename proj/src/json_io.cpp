#include "pkit/json_io.hpp"

#include <stdexcept>

namespace pkit {

using nlohmann::json;

namespace {

// Small coefficients go out as JSON numbers, big ones as decimal strings.
json coeff_json(const BigInt& c)
{
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

BigInt coeff_from_json(const json& j)
{
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long long>());
}

}  // namespace

json to_json(const Weight& w) { return {{"n", w.n()}, {"coords", w.coords()}, {"balls", w.balls()}}; }

Weight weight_from_json(const json& j)
{
    Weight w;
    if (j.contains("coords"))
        w = Weight::from_coords(j.at("coords").get<std::vector<int>>());
    else
        w = Weight::from_balls(j.at("balls").get<std::vector<int>>());
    if (j.contains("balls") && j.at("balls").get<std::vector<int>>() != w.balls())
        throw std::invalid_argument("coords and balls disagree");
    if (j.contains("n") && j.at("n").get<int>() != w.n()) throw std::invalid_argument("rank disagrees");
    return w;
}

json to_json(const GVector& v)
{
    json arr = json::array();
    for (const auto& [l, c] : v.terms())
        arr.push_back({{"family", family_name(l.family)},
                       {"weight", l.weight.coords()},
                       {"parity", l.parity},
                       {"coeff", coeff_json(c)}});
    return arr;
}

GVector gvector_from_json(const json& j)
{
    GVector v;
    for (const auto& t : j)
        v.add({parse_family(t.at("family").get<std::string>()),
               Weight::from_coords(t.at("weight").get<std::vector<int>>()), t.value("parity", 0) & 1},
              coeff_from_json(t.at("coeff")));
    return v;
}

json to_json(const ArrowDiagram& a)
{
    json solid = json::object(), dashed = json::object();
    for (const auto& [i, ts] : a.solid) solid[std::to_string(i)] = ts;
    for (const auto& [j, ts] : a.dashed) dashed[std::to_string(j)] = ts;
    return {{"solid", solid}, {"dashed", dashed}};
}

json to_json(const WedgeVector& w)
{
    json arr = json::array();
    for (const auto& [t, c] : w.terms()) arr.push_back({{"indices", t}, {"coeff", coeff_json(c)}});
    return arr;
}

json to_json(const BlockLabel& b) { return {{"p", b.p}, {"sign", b.plus ? "+" : "-"}}; }

json to_json(const std::vector<Component>& comps)
{
    json arr = json::array();
    for (const auto& c : comps) {
        json ws = json::array();
        for (const auto& w : c.weights) ws.push_back(w.coords());
        arr.push_back({{"kappa", c.kappa}, {"weights", ws}});
    }
    return {{"components", arr}};
}

namespace {

std::string symbol(Family f)
{
    switch (f) {
    case Family::Delta: return "Δ";
    case Family::Nabla: return "∇";
    case Family::Simple: return "L";
    case Family::Proj: return "P";
    }
    return "?";
}

template <class Terms, class Label>
std::string join_terms(const Terms& terms, Label label)
{
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (a != 1) out += a.str() + "·";
        out += label(key);
    }
    return out;
}

}  // namespace

std::string to_text(const GVector& v)
{
    return join_terms(v.terms(), [](const BasisLabel& l) {
        return std::string(l.parity ? "Π" : "") + "[" + symbol(l.family) + to_string(l.weight) + "]";
    });
}

std::string to_text(const WedgeVector& w)
{
    return join_terms(w.terms(), [](const Tuple& t) {
        std::string s;
        for (size_t i = 0; i < t.size(); ++i) s += (i ? "∧" : "") + std::string("u") + std::to_string(t[i]);
        return s;
    });
}

}  // namespace pkit

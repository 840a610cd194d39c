// pkit: weight, arrow and translation calculus for the periplectic Lie superalgebra p(n).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pkit/arrows.hpp"
#include "pkit/blocks.hpp"
#include "pkit/grothendieck.hpp"
#include "pkit/json_io.hpp"
#include "pkit/structure.hpp"
#include "pkit/translation.hpp"
#include "pkit/verify.hpp"
#include "pkit/weights.hpp"

using namespace pkit;
using nlohmann::json;

namespace {

struct Options {
    int n = 0;
    std::string weight;
    std::string mu;
    bool rho_shifted = false;
    std::string window;
    std::string format = "text";
    std::string basis = "delta";
    int k = 0;
    bool primed = false;
    int parity = 0;
    std::string suite = "all";
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        try {
            out.push_back(std::stoi(item, &used));
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + text);
        }
        if (used != item.size()) throw UsageError("bad integer list: " + text);
    }
    return out;
}

Weight read_weight(const Options& o, const std::string& text)
{
    if (text.empty()) throw UsageError("a weight is required");
    auto v = parse_ints(text);
    if (static_cast<int>(v.size()) != o.n)
        throw UsageError("weight has " + std::to_string(v.size()) + " entries, expected n = " + std::to_string(o.n));
    return o.rho_shifted ? Weight::from_balls(v) : Weight::from_coords(v);
}

Window read_window(const Options& o)
{
    if (!o.window.empty()) return parse_window(o.window);
    return default_window(o.n);
}

json wj(const Weight& w) { return to_json(w); }

std::string weights_text(const std::vector<Weight>& ws)
{
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : " ") + to_string(w);
    return s;
}

json weights_json(const std::vector<Weight>& ws)
{
    json a = json::array();
    for (const auto& w : ws) a.push_back(wj(w));
    return a;
}

void emit(const Options& o, const json& j, const std::string& text)
{
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_diagram(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    Window win = read_window(o);
    json j = wj(w);
    j["ascii"] = render_ascii(weight_to_diagram(w), win);
    emit(o, j, render_ascii(weight_to_diagram(w), win));
    return 0;
}

int cmd_arrows(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    auto a = build_arrows(w);
    json j = to_json(a);
    j["weight"] = wj(w);
    std::ostringstream t;
    t << render_arrows(a, read_window(o));
    for (const auto& [i, ts] : a.solid) {
        t << "solid from " << i << ": {";
        for (size_t k = 0; k < ts.size(); ++k) t << (k ? "," : "") << ts[k];
        t << "}\n";
    }
    for (const auto& [jpos, ts] : a.dashed) {
        t << "dashed from " << jpos << ": {";
        for (size_t k = 0; k < ts.size(); ++k) t << (k ? "," : "") << ts[k];
        t << "}\n";
    }
    emit(o, j, t.str());
    return 0;
}

int cmd_proj(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    auto up = up_set(w), down = down_set(w);
    GVector pd = proj_to_delta(w), pn = proj_to_nabla(w);
    json j = {{"weight", wj(w)}, {"up", weights_json(up)}, {"down", weights_json(down)},
              {"delta_filtration", to_json(pd)}, {"nabla_filtration", to_json(pn)}};
    std::ostringstream t;
    t << "up set:   " << weights_text(up) << "\n"
      << "down set: " << weights_text(down) << "\n"
      << "[P" << to_string(w) << "] = " << to_text(pd) << "\n"
      << "[P" << to_string(w) << "] = " << to_text(pn) << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_decomp(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    std::optional<Window> win;
    if (!o.window.empty()) win = parse_window(o.window);
    GVector d = delta_to_simple(w, win), nb = nabla_to_simple(w, win);
    json j = {{"weight", wj(w)}, {"delta", to_json(d)}, {"nabla", to_json(nb)}};
    std::ostringstream t;
    t << "[Δ" << to_string(w) << "] = " << to_text(d) << "\n"
      << "[∇" << to_string(w) << "] = " << to_text(nb) << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_hom(const Options& o)
{
    Weight l = read_weight(o, o.weight), m = read_weight(o, o.mu);
    int h = hom_dim(l, m);
    json j = {{"lambda", wj(l)}, {"mu", wj(m)}, {"hom_dim", h}, {"ext_possible", ext_possible(l, m)}};
    std::ostringstream t;
    t << "dim Hom(P" << to_string(l) << ", P" << to_string(m) << ") = " << h << "\n"
      << "Ext^1(L" << to_string(l) << ", L" << to_string(m) << ") may be nonzero: "
      << (ext_possible(l, m) ? "yes" : "no") << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_translate(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    json j = {{"weight", wj(w)}, {"k", o.k}, {"basis", o.basis}};
    std::ostringstream t;
    if (o.basis == "delta" || o.basis == "nabla") {
        Family f = o.basis == "delta" ? Family::Delta : Family::Nabla;
        GVector v = GVector::basis(f, w, o.parity);
        GVector r = o.primed ? theta_prime(o.k, v) : theta_full(o.k, v);
        j["primed"] = o.primed;
        j["result"] = to_json(r);
        j["wedge"] = to_json(wedge_map(r));
        t << (o.primed ? "θ'" : "θ") << "_" << o.k << " " << to_text(v) << " = " << to_text(r) << "\n";
    } else if (o.basis == "proj") {
        auto r = theta_proj(o.k, w);
        if (r) {
            j["result"] = {{"weight", wj(r->weight)}, {"parity", r->parity}};
            t << "Θ_" << o.k << " P" << to_string(w) << " = " << (r->parity ? "Π" : "") << "P" << to_string(r->weight)
              << "\n";
        } else {
            j["result"] = nullptr;
            t << "Θ_" << o.k << " P" << to_string(w) << " = 0\n";
        }
    } else if (o.basis == "simple") {
        std::optional<Window> win;
        if (!o.window.empty()) win = parse_window(o.window);
        GVector r = theta_simple(o.k, w, win);
        j["result"] = to_json(r);
        t << "[Θ_" << o.k << " L" << to_string(w) << "] = " << to_text(r) << "\n";
    } else {
        throw UsageError("unknown basis " + o.basis);
    }
    emit(o, j, t.str());
    return 0;
}

int cmd_dual(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    Weight d = dagger(w);
    auto s = sharp(w);
    Weight dd = dual_kac(Family::Delta, w), dn = dual_kac(Family::Nabla, w);
    json j = {{"weight", wj(w)},       {"dagger", wj(d)},           {"sharp", wj(s.weight)},
              {"m", s.m},              {"delta_dual", wj(dd)},       {"nabla_dual", wj(dn)}};
    std::ostringstream t;
    t << "dagger: " << to_string(d) << "\n"
      << "sharp:  " << to_string(s.weight) << "   L" << to_string(s.weight) << " = Π^" << s.m << " L"
      << to_string(w) << "*\n"
      << "Δ" << to_string(w) << "* = Δ" << to_string(dd) << "\n"
      << "∇" << to_string(w) << "* = ∇" << to_string(dn) << "\n";
    Window win = read_window(o);
    t << "\n" << render_ascii(weight_to_diagram(w), win) << "\n"
      << render_ascii(weight_to_diagram(d), win) << "\n"
      << render_ascii(weight_to_diagram(s.weight), win);
    emit(o, j, t.str());
    return 0;
}

int cmd_socle(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    Weight c = cosocle_nabla(w), s = socle_delta(w);
    auto sh = sharp(w);
    json j = {{"dagger", wj(dagger(w))}, {"sharp", wj(sh.weight)}, {"m", sh.m},
              {"cosocle_nabla", wj(c)},  {"socle_delta", wj(s)}};
    std::ostringstream t;
    t << "cosocle of ∇" << to_string(w) << ": L" << to_string(c) << "\n"
      << "socle of Δ" << to_string(w) << ":   L" << to_string(s) << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_block(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    BlockLabel b = block_of(w, o.parity);
    json j = {{"weight", wj(w)}, {"parity", o.parity}, {"kappa", kappa(w)}, {"q", q_parity(w)}, {"block", to_json(b)}};
    std::ostringstream t;
    t << "L" << to_string(w) << " with highest weight vector of parity " << o.parity << " lies in block (" << b.p
      << ", " << (b.plus ? "+" : "-") << ")\n";
    json moves = json::array();
    for (int i : {0, 1}) {
        auto tab = block_action(i, b, o.n);
        auto trk = block_action_tracked(i, b, o.n);
        json m = {{"i_parity", i ? "odd" : "even"}};
        m["tabulated"] = tab ? to_json(*tab) : json(nullptr);
        m["tracked"] = trk ? to_json(*trk) : json(nullptr);
        moves.push_back(m);
        auto show = [](const std::optional<BlockLabel>& x) {
            return x ? "(" + std::to_string(x->p) + ", " + (x->plus ? "+" : "-") + ")" : std::string("0");
        };
        t << "  Θ_i, i " << (i ? "odd " : "even") << ": tabulated " << show(tab) << ", tracked " << show(trk)
          << "\n";
    }
    j["theta"] = moves;
    emit(o, j, t.str());
    return 0;
}

int cmd_dims(const Options& o)
{
    Weight w = read_weight(o, o.weight);
    BigInt d = gl_dim(w);
    auto [thin, thick] = kac_dims(w);
    json j = {{"weight", wj(w)}, {"gl_dim", d.str()}, {"thin", thin.str()}, {"thick", thick.str()}};
    std::ostringstream t;
    t << "dim V" << to_string(w) << " = " << d << "\n"
      << "dim ∇" << to_string(w) << " = " << thin << "\n"
      << "dim Δ" << to_string(w) << " = " << thick << "\n";
    emit(o, j, t.str());
    return 0;
}

int cmd_verify(const Options& o)
{
    Window win = read_window(o);
    auto reports = run_suite(o.suite, o.n, win);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    bool ok = all_ok(reports);
    if (o.format == "json") {
        std::cout << arr.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    json failing = json::array();
    for (const auto& r : reports) {
        std::cout << (r.ok() ? "ok    " : "FAIL  ") << r.relation << " (" << r.failed << "/" << r.checked
                  << " failed)\n";
        if (!r.ok()) failing.push_back(r.to_json());
    }
    if (!ok) std::cout << failing.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weight diagrams, arrow diagrams and translation functors for p(n)"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sc, bool needs_weight) {
        sc->add_option("--n", o.n, "rank")->required()->check(CLI::PositiveNumber);
        auto* wopt = sc->add_option("--weight", o.weight, "comma-separated weight coordinates");
        if (needs_weight) wopt->required();
        sc->add_flag("--rho-shifted", o.rho_shifted, "read weights as ball positions");
        sc->add_option("--window", o.window, "position window lo..hi")->envname("PKIT_WINDOW");
        sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> cmds;
    auto add = [&](const char* name, const char* help, int (*fn)(const Options&), bool needs_weight = true) {
        auto* sc = app.add_subcommand(name, help);
        common(sc, needs_weight);
        cmds.emplace_back(sc, fn);
        return sc;
    };
    add("diagram", "render the weight diagram", cmd_diagram);
    add("arrows", "render the arrow diagram", cmd_arrows);
    add("proj", "up/down sets and Kac filtrations of P(lambda)", cmd_proj);
    add("decomp", "simple multiplicities of Delta and Nabla", cmd_decomp);
    add("hom", "dimension of Hom between projectives", cmd_hom)
        ->add_option("--mu", o.mu, "second weight")
        ->required();
    auto* tr = add("translate", "apply a translation functor", cmd_translate);
    tr->add_option("--basis", o.basis, "basis")->check(CLI::IsMember({"delta", "nabla", "proj", "simple"}));
    tr->add_option("--k", o.k, "functor index")->required();
    tr->add_option("--parity", o.parity, "parity of the input")->check(CLI::Range(0, 1));
    tr->add_flag("--primed", o.primed, "apply theta'_k instead of theta_k");
    add("dual", "duality data: dagger, sharp, Kac duals", cmd_dual);
    add("socle", "cosocle of Nabla and socle of Delta", cmd_socle);
    add("block", "block of L(lambda)", cmd_block)
        ->add_option("--parity", o.parity, "parity of the highest weight vector")
        ->check(CLI::Range(0, 1));
    add("dims", "dimensions of V, Nabla and Delta", cmd_dims);
    auto* ver = add("verify", "run verification suites", cmd_verify, false);
    ver->add_option("--suite", o.suite, "suite")
        ->check(CLI::IsMember({"arrows", "bgg", "tl", "proj", "duality", "socle", "blocks", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (auto& [sc, fn] : cmds)
            if (sc->parsed()) return fn(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
    return 2;
}

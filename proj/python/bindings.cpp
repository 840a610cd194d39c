#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pkit/arrows.hpp"
#include "pkit/blocks.hpp"
#include "pkit/grothendieck.hpp"
#include "pkit/json_io.hpp"
#include "pkit/structure.hpp"
#include "pkit/translation.hpp"
#include "pkit/verify.hpp"

namespace py = pybind11;
using namespace pkit;

namespace {

using Coords = std::vector<int>;

Weight W(const Coords& c) { return Weight::from_coords(c); }

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Coords> coords_of(const std::vector<Weight>& ws)
{
    std::vector<Coords> out;
    for (const auto& w : ws) out.push_back(w.coords());
    return out;
}

py::int_ big(const BigInt& b) { return py::int_(py::str(b.str())); }

}  // namespace

PYBIND11_MODULE(_pkit, m)
{
    m.doc() = "Weight and arrow diagram calculus for the periplectic Lie superalgebra p(n)";

    m.def("balls", [](const Coords& c) { return W(c).balls(); }, py::arg("weight"));
    m.def("from_balls", [](const Coords& b) { return Weight::from_balls(b).coords(); }, py::arg("balls"));
    m.def("render", [](const Coords& c, int lo, int hi) { return render_ascii(weight_to_diagram(W(c)), {lo, hi}); },
          py::arg("weight"), py::arg("lo"), py::arg("hi"));
    m.def("is_typical", [](const Coords& c) { return is_typical(W(c)); });
    m.def("kappa", [](const Coords& c) { return kappa(W(c)); });
    m.def("q_parity", [](const Coords& c) { return q_parity(W(c)); });
    m.def("gl_dim", [](const Coords& c) { return big(gl_dim(W(c))); });
    m.def("kac_dims", [](const Coords& c) {
        auto [thin, thick] = kac_dims(W(c));
        return py::make_tuple(big(thin), big(thick));
    });

    m.def("arrows", [](const Coords& c) { return to_py(to_json(build_arrows(W(c)))); });
    m.def("up_set", [](const Coords& c) { return coords_of(up_set(W(c))); });
    m.def("down_set", [](const Coords& c) { return coords_of(down_set(W(c))); });

    m.def("proj_to_delta", [](const Coords& c) { return to_py(to_json(proj_to_delta(W(c)))); });
    m.def("proj_to_nabla", [](const Coords& c) { return to_py(to_json(proj_to_nabla(W(c)))); });
    m.def("delta_to_simple", [](const Coords& c) { return to_py(to_json(delta_to_simple(W(c)))); });
    m.def("nabla_to_simple", [](const Coords& c) { return to_py(to_json(nabla_to_simple(W(c)))); });
    m.def("hom_dim", [](const Coords& a, const Coords& b) { return hom_dim(W(a), W(b)); });
    m.def("ext_possible", [](const Coords& a, const Coords& b) { return ext_possible(W(a), W(b)); });

    m.def("theta_delta", [](int k, const Coords& c, int parity) { return to_py(to_json(theta_delta(k, W(c), parity))); },
          py::arg("k"), py::arg("weight"), py::arg("parity") = 0);
    m.def("theta_nabla", [](int k, const Coords& c, int parity) { return to_py(to_json(theta_nabla(k, W(c), parity))); },
          py::arg("k"), py::arg("weight"), py::arg("parity") = 0);
    m.def("theta_proj", [](int i, const Coords& c) -> py::object {
        auto t = theta_proj(i, W(c));
        if (!t) return py::none();
        return py::make_tuple(t->weight.coords(), t->parity);
    });
    m.def("theta_simple", [](int i, const Coords& c) { return to_py(to_json(theta_simple(i, W(c)))); });

    m.def("dagger", [](const Coords& c) { return dagger(W(c)).coords(); });
    m.def("sharp", [](const Coords& c) {
        auto s = sharp(W(c));
        return py::make_tuple(s.weight.coords(), s.m);
    });
    m.def("cosocle_nabla", [](const Coords& c) { return cosocle_nabla(W(c)).coords(); });
    m.def("socle_delta", [](const Coords& c) { return socle_delta(W(c)).coords(); });

    m.def("block_of", [](const Coords& c, int parity) {
        auto b = block_of(W(c), parity);
        return py::make_tuple(b.p, b.plus ? "+" : "-");
    }, py::arg("weight"), py::arg("parity") = 0);

    m.def("verify", [](const std::string& suite, int n, int lo, int hi) {
        py::list out;
        for (const auto& r : run_suite(suite, n, {lo, hi})) out.append(to_py(r.to_json()));
        return out;
    }, py::arg("suite"), py::arg("n"), py::arg("lo"), py::arg("hi"));
}

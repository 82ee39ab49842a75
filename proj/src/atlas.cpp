#include "trisect/atlas.hpp"

#include "trisect/moves.hpp"

namespace trisect {

namespace {

IntMatrix slope_row(const Slope& s) { return IntMatrix{{s.p, s.q}}; }

TrisectionDiagram s4_genus0() { return TrisectionDiagram(0, {}, {}, {}, "s4-g0"); }

TrisectionDiagram s4_genus3()
{
    return TrisectionDiagram(3,
                             IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}},
                             IntMatrix{{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}},
                             IntMatrix{{-1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 1}}, "s4-g3");
}

const TorusTriple kCp2{{1, 0}, {0, 1}, {1, 1}};
const TorusTriple kCp2Mirror{{1, 0}, {0, 1}, {1, -1}};
const TorusTriple kS1xS3{{1, 0}, {1, 0}, {1, 0}};

// Homological model with (g, k) = (2, 0):
// alpha = (x1, x2), beta = (y1, y2), gamma = (x2 + y1, x1 + y2).
TrisectionDiagram s2xs2_model()
{
    return TrisectionDiagram(2, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}, IntMatrix{{0, 0, 1, 0}, {0, 0, 0, 1}},
                             IntMatrix{{0, 1, 1, 0}, {1, 0, 0, 1}}, "s2xs2-g2-model");
}

} // namespace

TrisectionDiagram torus_diagram(const TorusTriple& t)
{
    for (const Slope* s : {&t.alpha, &t.beta, &t.gamma})
        if (boost::multiprecision::gcd(s->p, s->q) != 1)
            throw std::invalid_argument("torus_diagram: slope (" + s->p.str() + "," + s->q.str() +
                                        ") is not primitive");
    return TrisectionDiagram(1, slope_row(t.alpha), slope_row(t.beta), slope_row(t.gamma));
}

TrisectionDiagram split_diagram(const std::vector<TorusTriple>& pieces)
{
    TrisectionDiagram d = s4_genus0().with_name(std::nullopt);
    for (const auto& p : pieces) d = direct_sum(d, torus_diagram(p));
    return d;
}

const std::vector<std::string>& builtin_names()
{
    static const std::vector<std::string> names{"s4-g0", "s4-g3",  "cp2", "cp2-mirror", "s1xs3",
                                                "cp2-sum-cp2mirror", "s2xs2-g2-model"};
    return names;
}

TrisectionDiagram builtin(std::string_view name)
{
    TrisectionDiagram d;
    if (name == "s4-g0") d = s4_genus0();
    else if (name == "s4-g3") d = s4_genus3();
    else if (name == "cp2") d = torus_diagram(kCp2).with_name("cp2");
    else if (name == "cp2-mirror") d = torus_diagram(kCp2Mirror).with_name("cp2-mirror");
    else if (name == "s1xs3") d = torus_diagram(kS1xS3).with_name("s1xs3");
    else if (name == "cp2-sum-cp2mirror") d = split_diagram({kCp2, kCp2Mirror}).with_name("cp2-sum-cp2mirror");
    else if (name == "s2xs2-g2-model") d = s2xs2_model();
    else throw std::out_of_range("unknown example '" + std::string(name) + "'");
    require_valid(d);
    return d;
}

FibrationParams mapping_torus_params(const Integer& genus)
{
    if (genus < 0) throw std::invalid_argument("mapping_torus_params: genus must be nonnegative");
    FibrationParams p{6 * genus + 1, 2 * genus + 1, 0};
    if (2 + p.genus - 3 * p.k != p.euler) throw std::logic_error("mapping_torus_params: Euler relation violated");
    return p;
}

FibrationParams bundle_over_s2_params(const Integer& fiber_genus)
{
    if (fiber_genus < 0) throw std::invalid_argument("bundle_over_s2_params: fiber genus must be nonnegative");
    FibrationParams p{8 * fiber_genus + 5, 4 * fiber_genus + 1, 4 - 4 * fiber_genus};
    if (2 + p.genus - 3 * p.k != p.euler) throw std::logic_error("bundle_over_s2_params: Euler relation violated");
    return p;
}

} // namespace trisect

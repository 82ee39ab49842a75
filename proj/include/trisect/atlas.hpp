#pragma once

// Built-in example diagrams and the parameter formulas for trisections of
// fibered 4-manifolds.

#include <string>
#include <string_view>
#include <vector>

#include "trisect/diagram.hpp"

namespace trisect {

/// Homology class p*x + q*y of a simple closed curve on a torus.
struct Slope {
    Integer p;
    Integer q;
    friend bool operator==(const Slope&, const Slope&) = default;
};

/// One alpha, beta and gamma curve on a genus-1 summand.
struct TorusTriple {
    Slope alpha;
    Slope beta;
    Slope gamma;
};

/// Genus-1 diagram with the three slopes. The result is not validated.
/// Throws std::invalid_argument if a slope is not primitive.
TrisectionDiagram torus_diagram(const TorusTriple& t);

/// Block sum of torus_diagram pieces; the empty list gives the genus-0 S^4.
/// Pieces need not be valid individually (the stabilization summand splits
/// into three invalid pieces). The result is not validated.
TrisectionDiagram split_diagram(const std::vector<TorusTriple>& pieces);

/// Stable catalog identifiers, in display order.
const std::vector<std::string>& builtin_names();

/// Throws std::out_of_range for an unknown name.
TrisectionDiagram builtin(std::string_view name);

struct FibrationParams {
    Integer genus;
    Integer k;
    Integer euler;
    friend bool operator==(const FibrationParams&, const FibrationParams&) = default;
};

/// Trisection of a mapping torus of a 3-manifold whose Heegaard genus is
/// `genus`: central genus 6g+1, k = 2g+1, chi = 0.
FibrationParams mapping_torus_params(const Integer& genus);

/// Trisection of a surface bundle over S^2 with fiber genus gF:
/// central genus 8gF+5, k = 4gF+1, chi = 4-4gF.
FibrationParams bundle_over_s2_params(const Integer& fiber_genus);

} // namespace trisect

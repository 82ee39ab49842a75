#pragma once

// Moves relating trisection diagrams of the same 4-manifold: handle slides
// within a system, the action of a surface diffeomorphism on homology, and
// stabilization (connect sum with the genus-3 diagram of S^4). Also connect
// sum, orientation reversal and a bounded slide-equivalence search.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "trisect/diagram.hpp"

namespace trisect {

/// Replace curve `target` of `system` by its band sum with curve `source`;
/// homologically row_target += sign * row_source. Indices are 0-based.
struct SlideMove {
    Label system = Label::alpha;
    std::size_t target = 0;
    std::size_t source = 1;
    int sign = 1;

    SlideMove inverse() const { return {system, target, source, -sign}; }
    friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

std::string to_string(const SlideMove& m);

/// The genus-3 stabilization summand:
///   alpha = (x1, x2, -x3), beta = (y1, y2, x3), gamma = (-x1, -y2, y3).
/// Its intersection triple is (diag(1,1,0), diag(1,0,1), diag(0,1,1)).
TrisectionDiagram stabilization_block();

/// The same summand written as spans, alpha = <x1,x2,y3>, beta = <x1,y2,x3>,
/// gamma = <y1,x2,x3>. It differs from stabilization_block() by a relabeling
/// of handles and has identical invariants.
TrisectionDiagram lagrangian_stabilization_block();

TrisectionDiagram stabilize(const TrisectionDiagram& d);

/// Throws std::out_of_range for bad indices, std::invalid_argument for
/// target == source or sign not +-1, InvalidDiagram for invalid input.
TrisectionDiagram handle_slide(const TrisectionDiagram& d, const SlideMove& m);

/// Every class v becomes v * S. Throws std::invalid_argument unless S is a
/// 2g x 2g symplectic matrix.
TrisectionDiagram apply_diffeomorphism(const TrisectionDiagram& d, const IntMatrix& s);

/// Block placement of the coordinate data, first diagram's handles first.
/// Does not validate; the summands need not be valid on their own.
TrisectionDiagram direct_sum(const TrisectionDiagram& a, const TrisectionDiagram& b);

/// direct_sum of two valid diagrams. Throws InvalidDiagram otherwise.
TrisectionDiagram connect_sum(const TrisectionDiagram& a, const TrisectionDiagram& b);

/// Basis change y_i -> -y_i on every class, which negates omega.
TrisectionDiagram reverse_orientation(const TrisectionDiagram& d);

struct SearchBudget {
    std::size_t max_depth = 3;
    std::size_t max_nodes = 100000;
};

struct Identical {};

struct SlideEquivalent {
    std::vector<SlideMove> certificate;  // apply in order to the first diagram
};

struct DistinctByInvariant {
    std::string invariant;
    std::string first_value;
    std::string second_value;
};

struct Unknown {
    std::size_t nodes_explored = 0;
    bool depth_exhausted = false;
    bool node_cap_hit = false;
};

using EquivalenceVerdict = std::variant<Identical, SlideEquivalent, DistinctByInvariant, Unknown>;

std::string to_string(const EquivalenceVerdict& v);

/// Applies the slides in order (validating each step).
TrisectionDiagram replay(const TrisectionDiagram& d, const std::vector<SlideMove>& certificate);

/// Invariants first, then exact equality, then breadth-first search over
/// slides of the first diagram. Never searches diffeomorphisms, so
/// inequivalence is only ever claimed on the basis of an invariant.
EquivalenceVerdict compare(const TrisectionDiagram& a, const TrisectionDiagram& b, SearchBudget budget = {});

} // namespace trisect

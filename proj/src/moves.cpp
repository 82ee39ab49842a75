#include "trisect/moves.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "trisect/symplectic.hpp"

namespace trisect {

namespace {

std::size_t index_of(Label l) { return static_cast<std::size_t>(l); }

std::array<IntMatrix, 3> classes_of(const TrisectionDiagram& d)
{
    return {d.alpha().classes, d.beta().classes, d.gamma().classes};
}

TrisectionDiagram from_classes(std::size_t genus, std::array<IntMatrix, 3> c,
                               std::optional<std::string> name = std::nullopt)
{
    return TrisectionDiagram(genus, std::move(c[0]), std::move(c[1]), std::move(c[2]), std::move(name));
}

// Places a genus-a class and a genus-b class side by side in genus a+b,
// keeping the (x..., y...) ordering.
IntMatrix sum_classes(const IntMatrix& a, std::size_t ga, const IntMatrix& b, std::size_t gb)
{
    const std::size_t g = ga + gb;
    IntMatrix s(g, 2 * g);
    for (std::size_t i = 0; i < ga; ++i)
        for (std::size_t j = 0; j < ga; ++j) {
            s(i, j) = a(i, j);
            s(i, g + j) = a(i, ga + j);
        }
    for (std::size_t i = 0; i < gb; ++i)
        for (std::size_t j = 0; j < gb; ++j) {
            s(ga + i, ga + j) = b(i, j);
            s(ga + i, g + ga + j) = b(i, gb + j);
        }
    return s;
}

void apply_slide_unchecked(std::array<IntMatrix, 3>& c, const SlideMove& m)
{
    c[index_of(m.system)].add_row_multiple(m.target, m.source, Integer(m.sign));
}

std::string state_key(const std::array<IntMatrix, 3>& c)
{
    std::string key;
    for (const auto& m : c) {
        for (const auto& x : m.data()) {
            key += x.str();
            key += ',';
        }
        key += '|';
    }
    return key;
}

std::vector<SlideMove> all_slides(std::size_t genus)
{
    std::vector<SlideMove> moves;
    for (Label l : {Label::alpha, Label::beta, Label::gamma})
        for (std::size_t t = 0; t < genus; ++t)
            for (std::size_t s = 0; s < genus; ++s) {
                if (s == t) continue;
                moves.push_back({l, t, s, 1});
                moves.push_back({l, t, s, -1});
            }
    return moves;
}

std::string value_string(const Parameters& p)
{
    return "(g=" + std::to_string(p.genus) + ", k=" + std::to_string(p.k) + ")";
}

} // namespace

std::string to_string(const SlideMove& m)
{
    std::ostringstream os;
    os << to_string(m.system) << '[' << m.target + 1 << "] " << (m.sign > 0 ? '+' : '-') << "= "
       << to_string(m.system) << '[' << m.source + 1 << ']';
    return os.str();
}

TrisectionDiagram stabilization_block()
{
    // Coordinates (x1, x2, x3, y1, y2, y3).
    return TrisectionDiagram(3,
                             IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0}},
                             IntMatrix{{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}},
                             IntMatrix{{-1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 1}});
}

TrisectionDiagram lagrangian_stabilization_block()
{
    return TrisectionDiagram(3,
                             IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1}},
                             IntMatrix{{1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}},
                             IntMatrix{{0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}});
}

TrisectionDiagram stabilize(const TrisectionDiagram& d)
{
    require_valid(d);
    return connect_sum(d, stabilization_block()).with_name(d.name());
}

TrisectionDiagram handle_slide(const TrisectionDiagram& d, const SlideMove& m)
{
    if (m.target >= d.genus() || m.source >= d.genus())
        throw std::out_of_range("handle_slide: curve index out of range");
    if (m.target == m.source) throw std::invalid_argument("handle_slide: a curve cannot slide over itself");
    if (m.sign != 1 && m.sign != -1) throw std::invalid_argument("handle_slide: sign must be +1 or -1");
    require_valid(d);
    auto c = classes_of(d);
    apply_slide_unchecked(c, m);
    return from_classes(d.genus(), std::move(c), d.name());
}

TrisectionDiagram apply_diffeomorphism(const TrisectionDiagram& d, const IntMatrix& s)
{
    if (s.rows() != 2 * d.genus() || s.cols() != 2 * d.genus())
        throw std::invalid_argument("apply_diffeomorphism: matrix must be " + std::to_string(2 * d.genus()) +
                                    " x " + std::to_string(2 * d.genus()));
    if (!is_symplectic(s)) throw std::invalid_argument("apply_diffeomorphism: matrix is not symplectic");
    auto c = classes_of(d);
    for (auto& m : c) m = m * s;
    return from_classes(d.genus(), std::move(c), d.name());
}

TrisectionDiagram direct_sum(const TrisectionDiagram& a, const TrisectionDiagram& b)
{
    const std::size_t ga = a.genus();
    const std::size_t gb = b.genus();
    std::array<IntMatrix, 3> c;
    for (std::size_t i = 0; i < 3; ++i)
        c[i] = sum_classes(a.systems()[i].classes, ga, b.systems()[i].classes, gb);
    std::optional<std::string> name;
    if (a.name() && b.name()) name = *a.name() + " # " + *b.name();
    return from_classes(ga + gb, std::move(c), std::move(name));
}

TrisectionDiagram connect_sum(const TrisectionDiagram& a, const TrisectionDiagram& b)
{
    require_valid(a);
    require_valid(b);
    return direct_sum(a, b);
}

TrisectionDiagram reverse_orientation(const TrisectionDiagram& d)
{
    require_valid(d);
    const std::size_t g = d.genus();
    auto c = classes_of(d);
    for (auto& m : c)
        for (std::size_t j = g; j < 2 * g; ++j) m.negate_col(j);
    return from_classes(g, std::move(c));
}

std::string to_string(const EquivalenceVerdict& v)
{
    struct Visitor {
        std::string operator()(const Identical&) const { return "identical"; }
        std::string operator()(const SlideEquivalent& s) const
        {
            std::string out = "slide-equivalent (" + std::to_string(s.certificate.size()) + " moves)";
            for (const auto& m : s.certificate) out += "\n  " + to_string(m);
            return out;
        }
        std::string operator()(const DistinctByInvariant& d) const
        {
            return "distinct-by-invariant: " + d.invariant + " " + d.first_value + " vs " + d.second_value;
        }
        std::string operator()(const Unknown& u) const
        {
            std::string out = "unknown: budget exhausted after " + std::to_string(u.nodes_explored) + " diagrams";
            if (u.node_cap_hit) out += " (node cap)";
            else if (u.depth_exhausted) out += " (depth limit)";
            return out;
        }
    };
    return std::visit(Visitor{}, v);
}

TrisectionDiagram replay(const TrisectionDiagram& d, const std::vector<SlideMove>& certificate)
{
    TrisectionDiagram cur = d;
    for (const auto& m : certificate) cur = handle_slide(cur, m);
    return cur;
}

EquivalenceVerdict compare(const TrisectionDiagram& a, const TrisectionDiagram& b, SearchBudget budget)
{
    const Invariants ia = invariants(a);
    const Invariants ib = invariants(b);
    if (ia.params != ib.params) return DistinctByInvariant{"parameters", value_string(ia.params), value_string(ib.params)};
    if (ia.euler != ib.euler) return DistinctByInvariant{"euler", ia.euler.str(), ib.euler.str()};
    if (ia.signature != ib.signature)
        return DistinctByInvariant{"signature", std::to_string(ia.signature), std::to_string(ib.signature)};
    if (ia.h1 != ib.h1) return DistinctByInvariant{"h1", to_string(ia.h1), to_string(ib.h1)};

    if (a == b) return Identical{};

    struct Node {
        std::array<IntMatrix, 3> classes;
        std::size_t parent;
        SlideMove move;
        std::size_t depth;
    };

    const auto target = classes_of(b);
    const auto moves = all_slides(a.genus());
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::size_t> visited;
    std::deque<std::size_t> queue;

    nodes.push_back({classes_of(a), 0, {}, 0});
    visited.emplace(state_key(nodes[0].classes), 0);
    queue.push_back(0);

    auto certificate_to = [&nodes](std::size_t idx) {
        std::vector<SlideMove> path;
        while (idx != 0) {
            path.push_back(nodes[idx].move);
            idx = nodes[idx].parent;
        }
        return std::vector<SlideMove>(path.rbegin(), path.rend());
    };

    Unknown unknown;
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= budget.max_depth) {
            unknown.depth_exhausted = true;
            continue;
        }
        for (const auto& m : moves) {
            auto next = nodes[cur].classes;
            apply_slide_unchecked(next, m);
            if (next == target) {
                nodes.push_back({std::move(next), cur, m, nodes[cur].depth + 1});
                return SlideEquivalent{certificate_to(nodes.size() - 1)};
            }
            if (nodes.size() >= budget.max_nodes) {
                unknown.node_cap_hit = true;
                unknown.nodes_explored = nodes.size();
                return unknown;
            }
            auto [it, inserted] = visited.emplace(state_key(next), nodes.size());
            if (!inserted) continue;
            nodes.push_back({std::move(next), cur, m, nodes[cur].depth + 1});
            queue.push_back(nodes.size() - 1);
        }
    }
    unknown.nodes_explored = nodes.size();
    return unknown;
}

} // namespace trisect

#include "trisect/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace trisect {

namespace {

constexpr std::array<std::array<Label, 2>, 3> kPairs{{
    {Label::alpha, Label::beta},
    {Label::beta, Label::gamma},
    {Label::gamma, Label::alpha},
}};

std::string pair_name(const std::array<Label, 2>& p)
{
    return std::string(to_string(p[0])) + "/" + std::string(to_string(p[1]));
}

std::string join(const std::vector<Integer>& xs)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

SystemCheck check_system(const CurveSystem& s)
{
    SystemCheck c;
    c.label = s.label;
    const auto smith = snf(s.classes);
    c.rank = smith.rank();
    c.full_rank = c.rank == s.genus();
    const auto f = smith.invariant_factors();
    c.saturated = std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
    const IntMatrix q = pairing(s.classes, s.classes);
    c.isotropic = std::all_of(q.data().begin(), q.data().end(), [](const Integer& x) { return x == 0; });
    return c;
}

PairCheck check_pair(const TrisectionDiagram& d, const std::array<Label, 2>& labels)
{
    PairCheck c;
    c.labels = labels;
    const IntMatrix& first = d.system(labels[0]).classes;
    const IntMatrix& second = d.system(labels[1]).classes;
    const auto smith = snf(pairing(first, second));
    c.q_invariant_factors = smith.invariant_factors();
    c.q_rank = smith.rank();
    c.k = d.genus() - c.q_rank;
    c.q_unimodular_factors = std::all_of(c.q_invariant_factors.begin(), c.q_invariant_factors.end(),
                                         [](const Integer& x) { return x == 1; });
    const AbelianGroup dbl = cokernel(vstack(first, second));
    c.double_free_rank = dbl.free_rank;
    c.double_torsion = dbl.torsion;
    c.double_ok = dbl.torsion.empty() && dbl.free_rank == c.k;
    return c;
}

// Assumes validity has already been established.
IntersectionTriple triple_of(const TrisectionDiagram& d)
{
    return {pairing(d.alpha().classes, d.beta().classes), pairing(d.beta().classes, d.gamma().classes),
            pairing(d.gamma().classes, d.alpha().classes)};
}

std::size_t k_of(const TrisectionDiagram& d)
{
    return d.genus() - rank(pairing(d.alpha().classes, d.beta().classes));
}

} // namespace

std::string_view to_string(Label l)
{
    switch (l) {
    case Label::alpha: return "alpha";
    case Label::beta: return "beta";
    case Label::gamma: return "gamma";
    }
    return "?";
}

std::optional<Label> parse_label(std::string_view s)
{
    if (s == "alpha") return Label::alpha;
    if (s == "beta") return Label::beta;
    if (s == "gamma") return Label::gamma;
    return std::nullopt;
}

std::string_view to_string(Failure f)
{
    switch (f) {
    case Failure::rank_deficient: return "rank-deficient";
    case Failure::not_primitive: return "not-primitive";
    case Failure::not_isotropic: return "not-isotropic";
    case Failure::pair_invariant_factor: return "pair-invariant-factor";
    case Failure::double_not_free: return "double-not-free";
    case Failure::double_rank_mismatch: return "double-rank-mismatch";
    case Failure::unequal_k: return "unequal-k";
    }
    return "?";
}

TrisectionDiagram::TrisectionDiagram(std::size_t genus, IntMatrix alpha, IntMatrix beta, IntMatrix gamma,
                                     std::optional<std::string> name)
    : genus_(genus), name_(std::move(name))
{
    systems_ = {CurveSystem{Label::alpha, std::move(alpha)}, CurveSystem{Label::beta, std::move(beta)},
                CurveSystem{Label::gamma, std::move(gamma)}};
    for (const auto& s : systems_)
        if (s.classes.rows() != genus || s.classes.cols() != 2 * genus)
            throw std::invalid_argument("TrisectionDiagram: " + std::string(to_string(s.label)) +
                                        " must be a " + std::to_string(genus) + " x " +
                                        std::to_string(2 * genus) + " matrix");
}

TrisectionDiagram TrisectionDiagram::with_name(std::optional<std::string> name) const
{
    TrisectionDiagram d = *this;
    d.name_ = std::move(name);
    return d;
}

bool ValidationReport::has(Failure f) const
{
    return std::any_of(diagnostics.begin(), diagnostics.end(), [f](const Diagnostic& d) { return d.kind == f; });
}

InvalidDiagram::InvalidDiagram(ValidationReport report)
    : std::runtime_error([&] {
          std::string msg = "invalid trisection diagram";
          for (const auto& d : report.diagnostics) msg += "; " + d.message;
          return msg;
      }()),
      report_(std::move(report))
{
}

ValidationReport validate(const TrisectionDiagram& d)
{
    ValidationReport r;
    r.genus = d.genus();

    for (std::size_t i = 0; i < 3; ++i) {
        const SystemCheck c = check_system(d.systems()[i]);
        r.systems[i] = c;
        const std::string name(to_string(c.label));
        if (!c.full_rank)
            r.diagnostics.push_back({Failure::rank_deficient, c.label, std::nullopt,
                                     name + " has rank " + std::to_string(c.rank) + " < genus " +
                                         std::to_string(d.genus())});
        if (!c.saturated)
            r.diagnostics.push_back({Failure::not_primitive, c.label, std::nullopt,
                                     name + " does not span a primitive sublattice"});
        if (!c.isotropic)
            r.diagnostics.push_back({Failure::not_isotropic, c.label, std::nullopt,
                                     name + " is not isotropic (curves intersect algebraically)"});
    }

    for (std::size_t i = 0; i < 3; ++i) {
        const PairCheck c = check_pair(d, kPairs[i]);
        r.pairs[i] = c;
        const std::string name = pair_name(c.labels);
        if (!c.q_unimodular_factors)
            r.diagnostics.push_back({Failure::pair_invariant_factor, std::nullopt, c.labels,
                                     "Q " + name + " has invariant factors (" + join(c.q_invariant_factors) +
                                         "), expected all 1"});
        if (!c.double_torsion.empty())
            r.diagnostics.push_back({Failure::double_not_free, std::nullopt, c.labels,
                                     "H1 of the " + name + " double has torsion (" + join(c.double_torsion) +
                                         ")"});
        if (c.double_free_rank != c.k)
            r.diagnostics.push_back({Failure::double_rank_mismatch, std::nullopt, c.labels,
                                     "H1 of the " + name + " double has free rank " +
                                         std::to_string(c.double_free_rank) + ", expected k = " +
                                         std::to_string(c.k)});
    }

    if (!(r.pairs[0].k == r.pairs[1].k && r.pairs[1].k == r.pairs[2].k))
        r.diagnostics.push_back({Failure::unequal_k, std::nullopt, std::nullopt,
                                 "pairwise k values disagree: alpha/beta " + std::to_string(r.pairs[0].k) +
                                     ", beta/gamma " + std::to_string(r.pairs[1].k) + ", gamma/alpha " +
                                     std::to_string(r.pairs[2].k)});

    r.valid = r.diagnostics.empty();
    if (r.valid) {
        r.k = r.pairs[0].k;
        r.euler = Integer(2) + Integer(d.genus()) - Integer(3) * Integer(*r.k);
    }
    return r;
}

void require_valid(const TrisectionDiagram& d)
{
    auto r = validate(d);
    if (!r.valid) throw InvalidDiagram(std::move(r));
}

Parameters parameters(const TrisectionDiagram& d)
{
    require_valid(d);
    return {d.genus(), k_of(d)};
}

Integer euler_characteristic(const TrisectionDiagram& d)
{
    const auto p = parameters(d);
    return Integer(2) + Integer(p.genus) - Integer(3) * Integer(p.k);
}

IntersectionTriple intersection_triple(const TrisectionDiagram& d) { return triple_of(d); }

LagrangianTriple lagrangian_triple(const TrisectionDiagram& d)
{
    for (const auto& s : d.systems())
        if (!is_lagrangian(s.classes))
            throw std::invalid_argument(std::string(to_string(s.label)) + " is not Lagrangian");
    return {LagrangianSublattice(d.alpha().classes), LagrangianSublattice(d.beta().classes),
            LagrangianSublattice(d.gamma().classes)};
}

long long signature(const TrisectionDiagram& d)
{
    require_valid(d);
    const auto t = lagrangian_triple(d);
    return maslov_index(t.alpha, t.beta, t.gamma);
}

std::string to_string(const AbelianGroup& g)
{
    if (g.trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << "Z";
        if (g.free_rank > 1) os << "^" << g.free_rank;
        first = false;
    }
    for (const auto& t : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

AbelianGroup cokernel(const IntMatrix& m)
{
    const auto s = snf(m);
    AbelianGroup g;
    g.free_rank = m.cols() - s.rank();
    for (const auto& f : s.invariant_factors())
        if (f > 1) g.torsion.push_back(f);
    return g;
}

AbelianGroup first_homology(const TrisectionDiagram& d)
{
    require_valid(d);
    return cokernel(vstack(vstack(d.alpha().classes, d.beta().classes), d.gamma().classes));
}

std::array<std::size_t, 5> handle_counts(const TrisectionDiagram& d)
{
    const auto p = parameters(d);
    return {1, p.k, p.genus - p.k, p.k, 1};
}

Invariants invariants(const TrisectionDiagram& d)
{
    require_valid(d);
    Invariants inv;
    inv.params = {d.genus(), k_of(d)};
    inv.euler = Integer(2) + Integer(inv.params.genus) - Integer(3) * Integer(inv.params.k);
    const auto t = lagrangian_triple(d);
    inv.signature = maslov_index(t.alpha, t.beta, t.gamma);
    inv.h1 = cokernel(vstack(vstack(d.alpha().classes, d.beta().classes), d.gamma().classes));
    return inv;
}

} // namespace trisect

#pragma once

// Trisection diagrams at the level of homology: three g-tuples of curve
// classes on a genus-g surface. Validation checks the homological
// necessary conditions for each pair of systems to be a Heegaard diagram of
// #^k (S^1 x S^2); curve-level (isotopy) data is not represented.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/intlin.hpp"
#include "trisect/symplectic.hpp"

namespace trisect {

enum class Label { alpha, beta, gamma };

std::string_view to_string(Label l);
/// Accepts "alpha", "beta", "gamma".
std::optional<Label> parse_label(std::string_view s);

/// g curve classes on a genus-g surface; row i holds the coordinates of curve
/// i in the (x1..xg, y1..yg) basis.
struct CurveSystem {
    Label label = Label::alpha;
    IntMatrix classes;

    std::size_t genus() const noexcept { return classes.rows(); }
    friend bool operator==(const CurveSystem&, const CurveSystem&) = default;
};

class TrisectionDiagram {
public:
    TrisectionDiagram() = default;
    /// Each system must be genus x 2*genus; throws std::invalid_argument otherwise.
    TrisectionDiagram(std::size_t genus, IntMatrix alpha, IntMatrix beta, IntMatrix gamma,
                      std::optional<std::string> name = std::nullopt);

    std::size_t genus() const noexcept { return genus_; }
    const CurveSystem& alpha() const noexcept { return systems_[0]; }
    const CurveSystem& beta() const noexcept { return systems_[1]; }
    const CurveSystem& gamma() const noexcept { return systems_[2]; }
    const CurveSystem& system(Label l) const noexcept { return systems_[static_cast<std::size_t>(l)]; }
    const std::array<CurveSystem, 3>& systems() const noexcept { return systems_; }

    const std::optional<std::string>& name() const noexcept { return name_; }
    TrisectionDiagram with_name(std::optional<std::string> name) const;

    /// Equality of coordinate data; the display name is ignored.
    friend bool operator==(const TrisectionDiagram& a, const TrisectionDiagram& b)
    {
        return a.genus_ == b.genus_ && a.systems_ == b.systems_;
    }

private:
    std::size_t genus_ = 0;
    std::array<CurveSystem, 3> systems_{CurveSystem{Label::alpha, {}}, CurveSystem{Label::beta, {}},
                                        CurveSystem{Label::gamma, {}}};
    std::optional<std::string> name_;
};

/// Intersection matrices in the cyclic order (alpha,beta), (beta,gamma), (gamma,alpha).
struct IntersectionTriple {
    IntMatrix q_ab;
    IntMatrix q_bc;
    IntMatrix q_ca;

    friend bool operator==(const IntersectionTriple&, const IntersectionTriple&) = default;
};

enum class Failure {
    rank_deficient,          // a system has rank < g
    not_primitive,           // a system's span is not saturated
    not_isotropic,           // omega does not vanish on a system
    pair_invariant_factor,   // a pairwise Q has an invariant factor > 1
    double_not_free,         // H1 of a pair's double has torsion
    double_rank_mismatch,    // H1 of a pair's double is not Z^k
    unequal_k,               // the three pairwise k values disagree
};

std::string_view to_string(Failure f);

struct Diagnostic {
    Failure kind;
    std::optional<Label> system;                   // set for per-system failures
    std::optional<std::array<Label, 2>> pair;      // set for per-pair failures
    std::string message;
};

struct SystemCheck {
    Label label;
    std::size_t rank = 0;
    bool full_rank = false;
    bool saturated = false;   // nonzero invariant factors of the span are all 1
    bool isotropic = false;
    bool lagrangian() const { return full_rank && saturated && isotropic; }
};

struct PairCheck {
    std::array<Label, 2> labels;
    std::vector<Integer> q_invariant_factors;  // nonzero invariant factors of Q
    std::size_t q_rank = 0;
    std::size_t k = 0;                         // g - rank Q
    std::size_t double_free_rank = 0;          // rank of coker [sys1; sys2]
    std::vector<Integer> double_torsion;       // torsion of coker [sys1; sys2]
    bool q_unimodular_factors = false;
    bool double_ok = false;
};

struct ValidationReport {
    std::size_t genus = 0;
    std::array<SystemCheck, 3> systems{};
    std::array<PairCheck, 3> pairs{};
    bool valid = false;
    std::optional<std::size_t> k;        // set when valid
    std::optional<Integer> euler;        // set when valid
    std::vector<Diagnostic> diagnostics;

    bool has(Failure f) const;
};

/// Thrown by operations that require a valid diagram.
class InvalidDiagram : public std::runtime_error {
public:
    explicit InvalidDiagram(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Runs every check and reports every failure. Never throws for
/// well-shaped diagrams.
ValidationReport validate(const TrisectionDiagram& d);

/// Throws InvalidDiagram if validate(d) fails.
void require_valid(const TrisectionDiagram& d);

struct Parameters {
    std::size_t genus = 0;
    std::size_t k = 0;
    friend bool operator==(const Parameters&, const Parameters&) = default;
};

Parameters parameters(const TrisectionDiagram& d);
Integer euler_characteristic(const TrisectionDiagram& d);
IntersectionTriple intersection_triple(const TrisectionDiagram& d);

struct LagrangianTriple {
    LagrangianSublattice alpha;
    LagrangianSublattice beta;
    LagrangianSublattice gamma;
};

/// Throws std::invalid_argument naming the first non-Lagrangian system.
LagrangianTriple lagrangian_triple(const TrisectionDiagram& d);

long long signature(const TrisectionDiagram& d);

/// Finitely generated abelian group Z^free_rank + sum Z/t_i, t_i > 1, t_i | t_{i+1}.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string to_string(const AbelianGroup& g);

/// Cokernel of the row span of m inside Z^{cols}.
AbelianGroup cokernel(const IntMatrix& m);

/// H1(X) = Z^{2g} / (L_alpha + L_beta + L_gamma).
AbelianGroup first_homology(const TrisectionDiagram& d);

/// (h0, h1, h2, h3, h4) = (1, k, g - k, k, 1).
std::array<std::size_t, 5> handle_counts(const TrisectionDiagram& d);

/// Everything move-invariant that the calculators report, in one value.
struct Invariants {
    Parameters params;
    Integer euler;
    long long signature = 0;
    AbelianGroup h1;

    friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants(const TrisectionDiagram& d);

} // namespace trisect

#pragma once

// H1 of a closed genus-g surface as the lattice Z^{2g} with basis ordered
// (x1..xg, y1..yg) and intersection form omega(x_i, y_j) = delta_ij,
// omega(x_i, x_j) = omega(y_i, y_j) = 0. Vectors are rows; a mapping class
// acts on the right, v -> v * S.

#include <cstddef>
#include <cstdint>
#include <span>

#include "trisect/intlin.hpp"

namespace trisect {

/// The 2g x 2g form matrix J = [[0, I], [-I, 0]].
IntMatrix form_matrix(std::size_t genus);

/// omega(u, v) = u * J * v^T. Throws std::invalid_argument on odd or
/// mismatched lengths.
Integer omega(std::span<const Integer> u, std::span<const Integer> v);

/// B1 * J * B2^T for row bases B1 and B2 of the same width.
IntMatrix pairing(const IntMatrix& b1, const IntMatrix& b2);

/// Rank g, primitive and isotropic. Throws std::invalid_argument unless the
/// input is g x 2g.
bool is_lagrangian(const IntMatrix& basis);

/// A rank-g primitive isotropic sublattice of Z^{2g}, stored by a row basis.
class LagrangianSublattice {
public:
    /// Throws std::invalid_argument if the basis is not Lagrangian.
    explicit LagrangianSublattice(IntMatrix basis);

    std::size_t genus() const noexcept { return basis_.rows(); }
    const IntMatrix& basis() const noexcept { return basis_; }

    friend bool operator==(const LagrangianSublattice&, const LagrangianSublattice&) = default;

private:
    IntMatrix basis_;
};

/// Entry (i, j) = omega(L_i, M_j). Throws on genus mismatch.
IntMatrix pairing_matrix(const LagrangianSublattice& l, const LagrangianSublattice& m);

/// S^T J S == J. Throws std::invalid_argument if S is not square of even size.
bool is_symplectic(const IntMatrix& s);

/// Symplectic transvection u -> u + omega(u, v) v, as a right-acting matrix.
IntMatrix transvection(std::span<const Integer> v);

/// Product of op_count transvections along x_i, y_i, x_i +- x_j, y_i +- y_j
/// and x_i +- y_j (each with random exponent +-1). Deterministic in the
/// arguments. genus 0 yields the 0 x 0 matrix.
IntMatrix random_symplectic(std::size_t genus, std::uint64_t seed, std::size_t op_count);

/// Maslov index of an ordered Lagrangian triple: the signature of the
/// symmetric form Psi((a,b,c), (a',b',c')) = omega(a, b') on
/// W = {(a,b,c) in L1 x L2 x L3 : a + b + c = 0}.
/// With the conventions above, (span x, span y, span x+y) has index +1.
long long maslov_index(const LagrangianSublattice& l1, const LagrangianSublattice& l2,
                       const LagrangianSublattice& l3);

} // namespace trisect

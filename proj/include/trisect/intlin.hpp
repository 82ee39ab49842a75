#pragma once

// Exact integer linear algebra over Z: Smith normal form and the handful of
// lattice utilities built on it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trisect/matrix.hpp"

namespace trisect {

/// D = U * M * V with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithDecomposition {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;

    std::size_t rank() const;
    /// Diagonal entries of D, length min(rows, cols), zeros included.
    std::vector<Integer> diagonal() const;
    /// Nonzero invariant factors only.
    std::vector<Integer> invariant_factors() const;
};

SmithDecomposition snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntMatrix& m);

/// True iff the rows are independent and span a saturated sublattice.
/// Requires rows <= cols.
bool is_primitive(const IntMatrix& m);

/// Basis (as rows) of the saturated left kernel {v : v * M = 0}. Returns a
/// 0 x rows matrix when the kernel is trivial.
IntMatrix left_kernel_basis(const IntMatrix& m);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long long signature() const
    {
        return static_cast<long long>(positive) - static_cast<long long>(negative);
    }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric rational matrix, by exact congruence
/// diagonalization. Throws std::invalid_argument if s is not symmetric.
Inertia symmetric_signature(const RationalMatrix& s);
Inertia symmetric_signature(const IntMatrix& s);

/// Product of op_count elementary row operations applied to I_n, driven by a
/// mt19937_64 stream seeded with seed. Deterministic in (n, seed, op_count).
IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, std::size_t op_count);

} // namespace trisect

#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's elimination routines; they are brute force or use a different
// algebraic route.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "trisect/intlin.hpp"
#include "trisect/symplectic.hpp"

namespace trisect::oracle {

/// Leibniz expansion over all permutations.
inline Integer leibniz_determinant(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        // Parity by counting inversions.
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) pick.push_back(i);
        out.push_back(std::move(pick));
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

/// Nonzero invariant factors from determinantal divisors:
/// d1 * ... * dk = gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m)
{
    std::vector<Integer> factors;
    Integer prev = 1;
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= top; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        combinations(m.rows(), k, rs);
        combinations(m.cols(), k, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix minor(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(r[i], c[j]);
                g = boost::multiprecision::gcd(g, leibniz_determinant(minor));
            }
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

/// Inertia from the characteristic polynomial (Faddeev-LeVerrier) and
/// Descartes' rule of signs, which is exact for real-rooted polynomials.
inline Inertia inertia_by_charpoly(const RationalMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);  // c[i] is the coefficient of lambda^i
    c[n] = 1;
    RationalMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = next;
        RationalMatrix am = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long long>(k));
    }
    auto sign_changes = [](const std::vector<Rational>& coeffs) {
        std::size_t changes = 0;
        int last = 0;
        for (const auto& x : coeffs) {
            if (x == 0) continue;
            const int s = x > 0 ? 1 : -1;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    Inertia out;
    while (out.zero < n && c[out.zero] == 0) ++out.zero;
    out.positive = sign_changes(c);
    std::vector<Rational> flipped(c);
    for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
    out.negative = sign_changes(flipped);
    return out;
}

/// Kashiwara's route: signature of q(a,b,c) = omega(a,b) + omega(b,c) +
/// omega(c,a) on L1 + L2 + L3 (external direct sum, dimension 3g), computed
/// with the characteristic-polynomial oracle. With our conventions this equals
/// minus the Maslov index computed on the solution space of a+b+c = 0.
inline long long kashiwara_index(const IntMatrix& b1, const IntMatrix& b2, const IntMatrix& b3)
{
    const std::size_t g = b1.rows();
    const IntMatrix p12 = pairing(b1, b2), p23 = pairing(b2, b3), p31 = pairing(b3, b1);
    IntMatrix q(3 * g, 3 * g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            q(i, g + j) = p12(i, j);
            q(g + j, i) = p12(i, j);
            q(g + i, 2 * g + j) = p23(i, j);
            q(2 * g + j, g + i) = p23(i, j);
            q(2 * g + i, j) = p31(i, j);
            q(j, 2 * g + i) = p31(i, j);
        }
    return inertia_by_charpoly(to_rational(q)).signature();
}

/// Integer combination of the rows: coefficient v[i] times row i.
inline std::vector<Integer> combine_rows(const std::vector<Integer>& v, const IntMatrix& m)
{
    std::vector<Integer> out(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    return out;
}

} // namespace trisect::oracle

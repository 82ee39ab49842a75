#include "trisect/symplectic.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace trisect {

IntMatrix form_matrix(std::size_t genus)
{
    IntMatrix j(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        j(i, genus + i) = 1;
        j(genus + i, i) = -1;
    }
    return j;
}

Integer omega(std::span<const Integer> u, std::span<const Integer> v)
{
    if (u.size() != v.size()) throw std::invalid_argument("omega: length mismatch");
    if (u.size() % 2 != 0) throw std::invalid_argument("omega: odd length");
    const std::size_t g = u.size() / 2;
    Integer s = 0;
    for (std::size_t i = 0; i < g; ++i) s += u[i] * v[g + i] - u[g + i] * v[i];
    return s;
}

IntMatrix pairing(const IntMatrix& b1, const IntMatrix& b2)
{
    if (b1.cols() != b2.cols() || b1.cols() % 2 != 0)
        throw std::invalid_argument("pairing: bases live in different lattices");
    IntMatrix q(b1.rows(), b2.rows());
    for (std::size_t i = 0; i < b1.rows(); ++i)
        for (std::size_t j = 0; j < b2.rows(); ++j) q(i, j) = omega(b1.row(i), b2.row(j));
    return q;
}

bool is_lagrangian(const IntMatrix& basis)
{
    if (basis.cols() != 2 * basis.rows())
        throw std::invalid_argument("is_lagrangian: expected a g x 2g matrix");
    if (!is_primitive(basis)) return false;
    const IntMatrix q = pairing(basis, basis);
    for (const auto& x : q.data())
        if (x != 0) return false;
    return true;
}

LagrangianSublattice::LagrangianSublattice(IntMatrix basis) : basis_(std::move(basis))
{
    if (!is_lagrangian(basis_)) throw std::invalid_argument("LagrangianSublattice: basis is not Lagrangian");
}

IntMatrix pairing_matrix(const LagrangianSublattice& l, const LagrangianSublattice& m)
{
    if (l.genus() != m.genus()) throw std::invalid_argument("pairing_matrix: genus mismatch");
    return pairing(l.basis(), m.basis());
}

bool is_symplectic(const IntMatrix& s)
{
    if (s.rows() != s.cols() || s.rows() % 2 != 0)
        throw std::invalid_argument("is_symplectic: expected a square matrix of even size");
    const IntMatrix j = form_matrix(s.rows() / 2);
    return s.transpose() * j * s == j;
}

IntMatrix transvection(std::span<const Integer> v)
{
    if (v.size() % 2 != 0) throw std::invalid_argument("transvection: odd length");
    const std::size_t n = v.size();
    const std::size_t g = n / 2;
    // Row i of the matrix is the image of e_i: e_i + omega(e_i, v) v.
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer w = i < g ? v[g + i] : Integer(-v[i - g]);
        if (w == 0) continue;
        for (std::size_t j = 0; j < n; ++j) t(i, j) += w * v[j];
    }
    return t;
}

IntMatrix random_symplectic(std::size_t genus, std::uint64_t seed, std::size_t op_count)
{
    const std::size_t n = 2 * genus;
    IntMatrix s = IntMatrix::identity(n);
    if (genus == 0) return s;
    std::mt19937_64 gen(seed);
    std::vector<Integer> v(n);
    for (std::size_t op = 0; op < op_count; ++op) {
        std::fill(v.begin(), v.end(), Integer(0));
        const std::size_t i = gen() % n;
        v[i] = 1;
        if (genus > 1 && gen() % 2 == 0) {
            std::size_t j = gen() % (n - 1);
            if (j >= i) ++j;
            v[j] = (gen() & 1) ? 1 : -1;
        }
        IntMatrix t = transvection(v);
        if (gen() & 1) {
            // Inverse transvection: u -> u - omega(u, v) v.
            t = IntMatrix::identity(n) - (t - IntMatrix::identity(n));
        }
        s = s * t;
    }
    return s;
}

long long maslov_index(const LagrangianSublattice& l1, const LagrangianSublattice& l2,
                       const LagrangianSublattice& l3)
{
    if (l1.genus() != l2.genus() || l2.genus() != l3.genus())
        throw std::invalid_argument("maslov_index: genus mismatch");
    const std::size_t g = l1.genus();
    if (g == 0) return 0;

    // Coefficient vectors (s, t, u) with s*B1 + t*B2 + u*B3 = 0 span W.
    const IntMatrix stacked = vstack(vstack(l1.basis(), l2.basis()), l3.basis());
    const IntMatrix w = left_kernel_basis(stacked);
    if (w.rows() == 0) return 0;

    IntMatrix first(w.rows(), g);
    IntMatrix second(w.rows(), g);
    for (std::size_t r = 0; r < w.rows(); ++r)
        for (std::size_t c = 0; c < g; ++c) {
            first(r, c) = w(r, c);
            second(r, c) = w(r, g + c);
        }
    const IntMatrix a = first * l1.basis();
    const IntMatrix b = second * l2.basis();
    return symmetric_signature(pairing(a, b)).signature();
}

} // namespace trisect

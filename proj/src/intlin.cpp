#include "trisect/intlin.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

namespace trisect {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

// Smallest nonzero |entry| in the trailing block A[t.., t..].
std::optional<Position> smallest_nonzero(const IntMatrix& a, std::size_t t)
{
    std::optional<Position> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (x == 0) continue;
            Integer ax = abs(x);
            if (!best || ax < best_abs) {
                best = Position{i, j};
                best_abs = std::move(ax);
            }
        }
    return best;
}

// Smallest nonzero |entry| in row t and column t of the trailing block.
std::optional<Position> smallest_in_cross(const IntMatrix& a, std::size_t t)
{
    std::optional<Position> best;
    Integer best_abs;
    auto consider = [&](std::size_t i, std::size_t j) {
        const Integer& x = a(i, j);
        if (x == 0) return;
        Integer ax = abs(x);
        if (!best || ax < best_abs) {
            best = Position{i, j};
            best_abs = std::move(ax);
        }
    };
    for (std::size_t i = t; i < a.rows(); ++i) consider(i, t);
    for (std::size_t j = t + 1; j < a.cols(); ++j) consider(t, j);
    return best;
}

class SmithReducer {
public:
    explicit SmithReducer(const IntMatrix& m)
        : a_(m), u_(IntMatrix::identity(m.rows())), v_(IntMatrix::identity(m.cols()))
    {
    }

    SmithDecomposition run()
    {
        const std::size_t steps = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < steps; ++t) {
            auto pivot = smallest_nonzero(a_, t);
            if (!pivot) break;
            move_to_pivot(*pivot, t);
            reduce_at(t);
            if (a_(t, t) < 0) {
                a_.negate_row(t);
                u_.negate_row(t);
            }
        }
        return {std::move(a_), std::move(u_), std::move(v_)};
    }

private:
    void move_to_pivot(Position p, std::size_t t)
    {
        a_.swap_rows(t, p.row);
        u_.swap_rows(t, p.row);
        a_.swap_cols(t, p.col);
        v_.swap_cols(t, p.col);
    }

    void row_op(std::size_t target, std::size_t source, const Integer& f)
    {
        a_.add_row_multiple(target, source, f);
        u_.add_row_multiple(target, source, f);
    }

    void col_op(std::size_t target, std::size_t source, const Integer& f)
    {
        a_.add_col_multiple(target, source, f);
        v_.add_col_multiple(target, source, f);
    }

    // Clears row t and column t outside the pivot and enforces that the pivot
    // divides every entry of the trailing block.
    void reduce_at(std::size_t t)
    {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) == 0) continue;
                Integer q = a_(i, t) / a_(t, t);
                if (q != 0) row_op(i, t, -q);
                if (a_(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) == 0) continue;
                Integer q = a_(t, j) / a_(t, t);
                if (q != 0) col_op(j, t, -q);
                if (a_(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder strictly smaller than the pivot survived.
                move_to_pivot(*smallest_in_cross(a_, t), t);
                continue;
            }
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < a_.rows() && !offending; ++i)
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (a_(i, j) % a_(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (!offending) return;
            row_op(t, *offending, Integer(1));
        }
    }

    IntMatrix a_;
    IntMatrix u_;
    IntMatrix v_;
};

} // namespace

std::size_t SmithDecomposition::rank() const
{
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D(i, i) != 0) ++r;
    return r;
}

std::vector<Integer> SmithDecomposition::diagonal() const
{
    const std::size_t n = std::min(D.rows(), D.cols());
    std::vector<Integer> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(D(i, i));
    return d;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> d;
    for (auto& x : diagonal())
        if (x != 0) d.push_back(x);
    return d;
}

SmithDecomposition snf(const IntMatrix& m) { return SmithReducer(m).run(); }

std::size_t rank(const IntMatrix& m) { return snf(m).rank(); }

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_primitive(const IntMatrix& m)
{
    if (m.rows() > m.cols()) return false;
    const auto d = snf(m).diagonal();
    return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

IntMatrix left_kernel_basis(const IntMatrix& m)
{
    const auto s = snf(m);
    const std::size_t r = s.rank();
    IntMatrix k(m.rows() - r, m.rows());
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) k(i - r, j) = s.U(i, j);
    return k;
}

Inertia symmetric_signature(const RationalMatrix& s)
{
    if (s.rows() != s.cols()) throw std::invalid_argument("symmetric_signature: matrix is not square");
    const std::size_t n = s.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s(i, j) != s(j, i)) throw std::invalid_argument("symmetric_signature: matrix is not symmetric");

    RationalMatrix a = s;
    Inertia out;
    auto swap_sym = [&a](std::size_t p, std::size_t q) {
        a.swap_rows(p, q);
        a.swap_cols(p, q);
    };
    auto congruence_op = [&a](std::size_t target, std::size_t source, const Rational& f) {
        a.add_row_multiple(target, source, f);
        a.add_col_multiple(target, source, f);
    };

    std::size_t t = 0;
    while (t < n) {
        std::size_t p = t;
        while (p < n && a(p, p) == 0) ++p;
        if (p < n) {
            swap_sym(t, p);
            const Rational pivot = a(t, t);
            (pivot > 0 ? out.positive : out.negative) += 1;
            for (std::size_t i = t + 1; i < n; ++i)
                if (a(i, t) != 0) congruence_op(i, t, -a(i, t) / pivot);
            ++t;
            continue;
        }

        // Zero diagonal on the trailing block: split off a hyperbolic plane.
        std::optional<Position> off;
        for (std::size_t i = t; i < n && !off; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (a(i, j) != 0) {
                    off = Position{i, j};
                    break;
                }
        if (!off) {
            out.zero += n - t;
            break;
        }
        swap_sym(t, off->row);
        swap_sym(t + 1, off->col == t ? off->row : off->col);
        const Rational b = a(t, t + 1);
        out.positive += 1;
        out.negative += 1;
        for (std::size_t k = t + 2; k < n; ++k) {
            const Rational c_first = a(k, t + 1) / b;
            const Rational c_second = a(k, t) / b;
            if (c_first != 0) congruence_op(k, t, -c_first);
            if (c_second != 0) congruence_op(k, t + 1, -c_second);
        }
        t += 2;
    }
    return out;
}

Inertia symmetric_signature(const IntMatrix& s) { return symmetric_signature(to_rational(s)); }

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, std::size_t op_count)
{
    if (n == 0) throw std::invalid_argument("random_unimodular: n must be positive");
    std::mt19937_64 gen(seed);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t op = 0; op < op_count; ++op) {
        const std::size_t target = gen() % n;
        if (n == 1 || gen() % 8 == 0) {
            m.negate_row(target);
            continue;
        }
        std::size_t source = gen() % (n - 1);
        if (source >= target) ++source;
        m.add_row_multiple(target, source, Integer((gen() & 1) ? 1 : -1));
    }
    return m;
}

} // namespace trisect

#ifndef GSPEC_EXACT_LINALG_HPP
#define GSPEC_EXACT_LINALG_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gspec/graph.hpp"

namespace gspec {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers, row-major.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
    }
    ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ExactMatrix: ragged rows");
            for (long long x : r) a_.emplace_back(x);
        }
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int i, int j) { return a_[index(i, j)]; }
    const BigInt& operator()(int i, int j) const { return a_[index(i, j)]; }

    bool operator==(const ExactMatrix&) const = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix index");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

/// A(g) - mu*I.
inline ExactMatrix shifted_adjacency(const Graph& g, int mu) {
    const int n = g.order();
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j : g.neighbors(i)) m(i, j) = 1;
        m(i, i) = -mu;
    }
    return m;
}

namespace detail {

struct Int64Overflow {};

// Bareiss step (p*x - y*z) / prev on machine words; throws Int64Overflow when
// the quotient leaves int64. Products are formed in 128 bits.
struct CheckedInt64Ops {
    static std::int64_t combine(std::int64_t p, std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t prev) {
        const __int128 num = static_cast<__int128>(p) * x - static_cast<__int128>(y) * z;
        if (num % prev != 0) throw std::logic_error("Bareiss: inexact division");
        const __int128 q = num / prev;
        if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
            throw Int64Overflow{};
        return static_cast<std::int64_t>(q);
    }
};

struct BigIntOps {
    static BigInt combine(const BigInt& p, const BigInt& x, const BigInt& y, const BigInt& z, const BigInt& prev) {
        BigInt num = p * x - y * z;
        BigInt q;
        BigInt r;
        boost::multiprecision::divide_qr(num, prev, q, r);
        if (r != 0) throw std::logic_error("Bareiss: inexact division");
        return q;
    }
};

struct EliminationResult {
    int rank = 0;
    int swaps = 0;
};

// Fraction-free Gaussian elimination with the first nonzero entry of each
// column as pivot. On return `a` is in fraction-free echelon form; the last
// pivot is the determinant (up to the swap sign) when the matrix is square
// and nonsingular.
template <typename T, typename Ops>
EliminationResult bareiss_eliminate(std::vector<T>& a, int rows, int cols) {
    auto at = [&](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * cols + j]; };
    EliminationResult res;
    T prev = 1;
    for (int col = 0; col < cols && res.rank < rows; ++col) {
        int pivot = -1;
        for (int i = res.rank; i < rows; ++i) {
            if (at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        const int r = res.rank;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
            ++res.swaps;
        }
        const T p = at(r, col);
        for (int i = r + 1; i < rows; ++i) {
            const T lead = at(i, col);
            if (lead == 0) {
                // the update is p * x / prev: zeros stay zero, and p == prev is a no-op
                if (p == prev) continue;
                for (int j = col + 1; j < cols; ++j)
                    if (at(i, j) != 0) at(i, j) = Ops::combine(p, at(i, j), lead, at(r, j), prev);
                continue;
            }
            for (int j = col + 1; j < cols; ++j) at(i, j) = Ops::combine(p, at(i, j), lead, at(r, j), prev);
            at(i, col) = 0;
        }
        prev = p;
        ++res.rank;
    }
    return res;
}

inline std::optional<std::vector<std::int64_t>> to_int64(const ExactMatrix& m) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const BigInt& x = m(i, j);
            if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
                return std::nullopt;
            out.push_back(static_cast<std::int64_t>(x));
        }
    }
    return out;
}

inline std::vector<BigInt> to_bigint(const ExactMatrix& m) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

}  // namespace detail

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs on
/// checked 64-bit words first and restarts with arbitrary precision if any
/// intermediate minor leaves the word range; both paths are exact.
inline int exact_rank(const ExactMatrix& m) {
    if (auto small = detail::to_int64(m)) {
        try {
            return detail::bareiss_eliminate<std::int64_t, detail::CheckedInt64Ops>(*small, m.rows(), m.cols()).rank;
        } catch (const detail::Int64Overflow&) {
        }
    }
    auto big = detail::to_bigint(m);
    return detail::bareiss_eliminate<BigInt, detail::BigIntOps>(big, m.rows(), m.cols()).rank;
}

/// Exact determinant of a square matrix.
inline BigInt determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const int n = m.rows();
    if (n == 0) return 1;
    auto big = detail::to_bigint(m);
    const auto res = detail::bareiss_eliminate<BigInt, detail::BigIntOps>(big, n, n);
    if (res.rank < n) return 0;
    BigInt det = big[static_cast<std::size_t>(n) * n - 1];
    return res.swaps % 2 == 0 ? det : BigInt(-det);
}

/// Multiplicity of the integer mu as an eigenvalue of A(g): n - rank(A - mu I).
inline int multiplicity(const Graph& g, int mu) {
    const int n = g.order();
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j : g.neighbors(i)) a[static_cast<std::size_t>(i) * n + j] = 1;
        a[static_cast<std::size_t>(i) * n + i] = -mu;
    }
    try {
        return n - detail::bareiss_eliminate<std::int64_t, detail::CheckedInt64Ops>(a, n, n).rank;
    } catch (const detail::Int64Overflow&) {
        return n - exact_rank(shifted_adjacency(g, mu));
    }
}

/// Multiplicity of mu for the path P_k, for any k >= 1 (not limited by the
/// Graph vertex cap).
inline int path_multiplicity(int k, int mu) {
    if (k < 1) throw std::invalid_argument("path_multiplicity: k must be positive");
    ExactMatrix m(k, k);
    for (int i = 0; i < k; ++i) {
        m(i, i) = -mu;
        if (i + 1 < k) m(i, i + 1) = m(i + 1, i) = 1;
    }
    return k - exact_rank(m);
}

/// Rank of A(g) + I, the quantity the rank-gap arguments are phrased in.
inline int rank_a_plus_i(const Graph& g) { return g.order() - multiplicity(g, -1); }

/// Largest order accepted by char_poly.
inline constexpr int kCharPolyMaxOrder = 16;

/// Coefficients c_0..c_n of det(lambda I - A), so coeffs[k] multiplies lambda^k.
struct CharPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly&) const = default;
};

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence over exact
/// integers: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
inline CharPoly char_poly(const Graph& g) {
    const int n = g.order();
    if (n > kCharPolyMaxOrder)
        throw std::invalid_argument("char_poly: order " + std::to_string(n) + " above " +
                                    std::to_string(kCharPolyMaxOrder));
    CharPoly p;
    p.coeffs.assign(n + 1, 0);
    p.coeffs[n] = 1;
    std::vector<BigInt> m(static_cast<std::size_t>(n) * n, 0);  // M_0 = 0
    std::vector<BigInt> am(m.size());
    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    for (int k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{n-k+1} I
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int t : g.neighbors(i)) s += m[idx(t, j)];
                am[idx(i, j)] = s;
            }
        }
        for (int i = 0; i < n; ++i) am[idx(i, i)] += p.coeffs[n - k + 1];
        m.swap(am);
        // tr(A M_k)
        BigInt tr = 0;
        for (int i = 0; i < n; ++i)
            for (int t : g.neighbors(i)) tr += m[idx(t, i)];
        BigInt q;
        BigInt r;
        boost::multiprecision::divide_qr(BigInt(-tr), BigInt(k), q, r);
        if (r != 0) throw std::logic_error("char_poly: inexact trace division");
        p.coeffs[n - k] = q;
    }
    return p;
}

/// Largest k such that (lambda - mu)^k divides p, by repeated synthetic division.
inline int multiplicity_from_charpoly(const CharPoly& p, int mu) {
    std::vector<BigInt> c = p.coeffs;
    int k = 0;
    while (c.size() > 1) {
        // divide c (coefficients low->high) by (lambda - mu)
        const std::size_t deg = c.size() - 1;
        std::vector<BigInt> q(deg);
        BigInt carry = c[deg];
        for (std::size_t i = deg; i-- > 0;) {
            q[i] = carry;
            carry = c[i] + carry * mu;
        }
        if (carry != 0) break;
        c = std::move(q);
        ++k;
    }
    return k;
}

}  // namespace gspec

#endif  // GSPEC_EXACT_LINALG_HPP

#include "capdual/snf.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace capdual {

namespace {

struct OverflowSignal {};

/// Checked 64-bit arithmetic; any wraparound aborts the fast path.
struct I64Ops {
    using T = long long;
    static T from_int(const Int& x) {
        if (!x.fits_slong_p()) throw OverflowSignal{};
        return x.get_si();
    }
    static Int to_int(const T& x) { return Int(static_cast<long>(x)); }
    static T add(T a, T b) {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static T sub(T a, T b) {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static T mul(T a, T b) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static T neg(T a) {
        if (a == std::numeric_limits<T>::min()) throw OverflowSignal{};
        return -a;
    }
    static T quot(T a, T b) {
        if (a == std::numeric_limits<T>::min() && b == -1) throw OverflowSignal{};
        return a / b;  // truncated
    }
    static T rem(T a, T b) {
        if (a == std::numeric_limits<T>::min() && b == -1) throw OverflowSignal{};
        return a % b;
    }
    static bool is_zero(T a) { return a == 0; }
    static bool is_neg(T a) { return a < 0; }
    static bool abs_less(T a, T b) {
        // |a| < |b| without overflow on min()
        unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                      : static_cast<unsigned long long>(a);
        unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                      : static_cast<unsigned long long>(b);
        return ua < ub;
    }
    static bool abs_is_one(T a) { return a == 1 || a == -1; }
};

struct ZOps {
    using T = Int;
    static T from_int(const Int& x) { return x; }
    static Int to_int(const T& x) { return x; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T quot(const T& a, const T& b) {
        T q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static T rem(const T& a, const T& b) {
        T r;
        mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static bool is_zero(const T& a) { return a == 0; }
    static bool is_neg(const T& a) { return a < 0; }
    static bool abs_less(const T& a, const T& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }
    static bool abs_is_one(const T& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
};

template <typename T>
struct Grid {
    Index rows = 0, cols = 0;
    std::vector<T> a;
    Grid() = default;
    Grid(Index r, Index c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
    T& at(Index r, Index c) { return a[static_cast<size_t>(r) * cols + c]; }
    const T& at(Index r, Index c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static Grid identity(Index n) {
        Grid g(n, n);
        for (Index i = 0; i < n; ++i) g.at(i, i) = T(1);
        return g;
    }
    void swap_rows(Index r1, Index r2) {
        if (r1 == r2) return;
        for (Index c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
    }
    void swap_cols(Index c1, Index c2) {
        if (c1 == c2) return;
        for (Index r = 0; r < rows; ++r) std::swap(at(r, c1), at(r, c2));
    }
};

template <typename Ops>
class SnfEngine {
    using T = typename Ops::T;

  public:
    SnfEngine(const MatZ& m, const SnfOptions& opts) : opts_(opts), d_(m.rows(), m.cols()) {
        for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c) d_.at(r, c) = Ops::from_int(m(r, c));
        if (opts.want_u) u_ = Grid<T>::identity(m.rows());
        if (opts.want_u_inv) u_inv_ = Grid<T>::identity(m.rows());
        if (opts.want_v) v_ = Grid<T>::identity(m.cols());
        if (opts.want_v_inv) v_inv_ = Grid<T>::identity(m.cols());
    }

    SnfCertificate run() {
        const Index m = d_.rows, n = d_.cols;
        Index t = 0;
        while (t < m && t < n) {
            if (!select_pivot(t)) break;
            reduce_pivot(t);
            if (Ops::is_neg(d_.at(t, t))) negate_row(t);
            ++t;
        }
        SnfCertificate cert;
        cert.rows = m;
        cert.cols = n;
        for (Index i = 0; i < t; ++i) cert.invariant_factors.push_back(Ops::to_int(d_.at(i, i)));
        if (opts_.want_u) cert.u = to_mat(u_);
        if (opts_.want_u_inv) cert.u_inv = to_mat(u_inv_);
        if (opts_.want_v) cert.v = to_mat(v_);
        if (opts_.want_v_inv) cert.v_inv = to_mat(v_inv_);
        return cert;
    }

  private:
    SnfOptions opts_;
    Grid<T> d_, u_, u_inv_, v_, v_inv_;

    static MatZ to_mat(const Grid<T>& g) {
        MatZ m(g.rows, g.cols);
        for (Index r = 0; r < g.rows; ++r)
            for (Index c = 0; c < g.cols; ++c) m(r, c) = Ops::to_int(g.at(r, c));
        return m;
    }

    /// Minimal-|entry| pivot in the trailing block, ties by lowest (row, col).
    /// A unit entry cannot be beaten, so the scan stops at the first one.
    bool select_pivot(Index t) {
        Index bi = -1, bj = -1;
        for (Index r = t; r < d_.rows; ++r) {
            for (Index c = t; c < d_.cols; ++c) {
                const T& x = d_.at(r, c);
                if (Ops::is_zero(x)) continue;
                if (bi < 0 || Ops::abs_less(x, d_.at(bi, bj))) {
                    bi = r;
                    bj = c;
                    if (Ops::abs_is_one(x)) {
                        swap_rows(t, bi);
                        swap_cols(t, bj);
                        return true;
                    }
                }
            }
        }
        if (bi < 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void reduce_pivot(Index t) {
        const Index m = d_.rows, n = d_.cols;
        bool restart = true;
        while (restart) {
            restart = false;
            // clear column t
            for (Index r = t + 1; r < m; ++r) {
                if (Ops::is_zero(d_.at(r, t))) continue;
                T q = Ops::quot(d_.at(r, t), d_.at(t, t));
                if (!Ops::is_zero(q)) row_axpy(r, t, Ops::neg(q), t);
                if (!Ops::is_zero(d_.at(r, t))) {  // remainder beats the pivot
                    swap_rows(t, r);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            // clear row t
            for (Index c = t + 1; c < n; ++c) {
                if (Ops::is_zero(d_.at(t, c))) continue;
                T q = Ops::quot(d_.at(t, c), d_.at(t, t));
                if (!Ops::is_zero(q)) col_axpy(c, t, Ops::neg(q), t);
                if (!Ops::is_zero(d_.at(t, c))) {
                    swap_cols(t, c);
                    restart = true;
                    break;
                }
            }
            if (restart) continue;
            // pivot must divide the whole trailing block (divisibility chain)
            for (Index r = t + 1; r < m && !restart; ++r) {
                for (Index c = t + 1; c < n; ++c) {
                    if (Ops::is_zero(d_.at(r, c))) continue;
                    if (!Ops::is_zero(Ops::rem(d_.at(r, c), d_.at(t, t)))) {
                        row_axpy(t, r, T(1), t);  // pull the offender into row t
                        restart = true;
                        break;
                    }
                }
            }
        }
    }

    // --- elementary operations, mirrored into the tracked transforms ---

    void swap_rows(Index r1, Index r2) {
        if (r1 == r2) return;
        d_.swap_rows(r1, r2);
        if (opts_.want_u) u_.swap_rows(r1, r2);
        if (opts_.want_u_inv) u_inv_.swap_cols(r1, r2);
    }

    void swap_cols(Index c1, Index c2) {
        if (c1 == c2) return;
        d_.swap_cols(c1, c2);
        if (opts_.want_v) v_.swap_cols(c1, c2);
        if (opts_.want_v_inv) v_inv_.swap_rows(c1, c2);
    }

    /// D.row(dst) += c * D.row(src); columns < from are zero in both rows.
    void row_axpy(Index dst, Index src, const T& c, Index from) {
        for (Index j = from; j < d_.cols; ++j) {
            const T& s = d_.at(src, j);
            if (!Ops::is_zero(s)) d_.at(dst, j) = Ops::add(d_.at(dst, j), Ops::mul(c, s));
        }
        if (opts_.want_u)
            for (Index j = 0; j < u_.cols; ++j) {
                const T& s = u_.at(src, j);
                if (!Ops::is_zero(s)) u_.at(dst, j) = Ops::add(u_.at(dst, j), Ops::mul(c, s));
            }
        if (opts_.want_u_inv)  // Uinv.col(src) -= c * Uinv.col(dst)
            for (Index i = 0; i < u_inv_.rows; ++i) {
                const T& s = u_inv_.at(i, dst);
                if (!Ops::is_zero(s))
                    u_inv_.at(i, src) = Ops::sub(u_inv_.at(i, src), Ops::mul(c, s));
            }
    }

    /// D.col(dst) += c * D.col(src); rows < from are zero in both columns.
    void col_axpy(Index dst, Index src, const T& c, Index from) {
        for (Index i = from; i < d_.rows; ++i) {
            const T& s = d_.at(i, src);
            if (!Ops::is_zero(s)) d_.at(i, dst) = Ops::add(d_.at(i, dst), Ops::mul(c, s));
        }
        if (opts_.want_v)
            for (Index i = 0; i < v_.rows; ++i) {
                const T& s = v_.at(i, src);
                if (!Ops::is_zero(s)) v_.at(i, dst) = Ops::add(v_.at(i, dst), Ops::mul(c, s));
            }
        if (opts_.want_v_inv)  // Vinv.row(src) -= c * Vinv.row(dst)
            for (Index j = 0; j < v_inv_.cols; ++j) {
                const T& s = v_inv_.at(dst, j);
                if (!Ops::is_zero(s))
                    v_inv_.at(src, j) = Ops::sub(v_inv_.at(src, j), Ops::mul(c, s));
            }
    }

    void negate_row(Index r) {
        for (Index j = r; j < d_.cols; ++j)
            if (!Ops::is_zero(d_.at(r, j))) d_.at(r, j) = Ops::neg(d_.at(r, j));
        if (opts_.want_u)
            for (Index j = 0; j < u_.cols; ++j)
                if (!Ops::is_zero(u_.at(r, j))) u_.at(r, j) = Ops::neg(u_.at(r, j));
        if (opts_.want_u_inv)
            for (Index i = 0; i < u_inv_.rows; ++i)
                if (!Ops::is_zero(u_inv_.at(i, r))) u_inv_.at(i, r) = Ops::neg(u_inv_.at(i, r));
    }
};

bool fits_i64(const MatZ& m) {
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            if (!m(r, c).fits_slong_p()) return false;
    return true;
}

}  // namespace

SnfCertificate smith_normal_form(const MatZ& m, const SnfOptions& opts) {
    if (fits_i64(m)) {
        try {
            return SnfEngine<I64Ops>(m, opts).run();
        } catch (const OverflowSignal&) {
            // fall through to exact arithmetic
        }
    }
    return SnfEngine<ZOps>(m, opts).run();
}

Int bareiss_determinant(const MatZ& m) {
    require(m.rows() == m.cols(), ErrorCode::DegreeMismatch, "determinant of non-square matrix");
    const Index n = m.rows();
    if (n == 0) return 1;
    MatZ a = m;
    Int prev = 1;
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Index p = -1;
            for (Index r = k + 1; r < n; ++r)
                if (a(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

}  // namespace capdual

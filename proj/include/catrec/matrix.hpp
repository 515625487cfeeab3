#ifndef CATREC_MATRIX_HPP
#define CATREC_MATRIX_HPP

#include <type_traits>
#include <utility>
#include <vector>

#include "catrec/errors.hpp"
#include "catrec/field.hpp"

namespace catrec {

// Dense matrix over an exact coefficient field.  All operations are pure;
// matrices are value types.
template <class F>
class Mat {
  public:
    using Elem = typename F::Elem;

    Mat(F field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

    static Mat identity(F field, int n) {
        Mat m(field, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = m.field_.one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Elem& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!field_.eq((*this)(i, j), (*this)(j, i))) return false;
        return true;
    }

    bool is_skew() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i) {
            if (!field_.is_zero((*this)(i, i))) return false;
            for (int j = i + 1; j < cols_; ++j)
                if (!field_.eq((*this)(i, j), field_.neg((*this)(j, i)))) return false;
        }
        return true;
    }

    Mat transposed() const {
        Mat t(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Mat r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Elem& aik = (*this)(i, k);
                if (field_.is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = field_.add(r(i, j), field_.mul(aik, o(k, j)));
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix diff shape mismatch");
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }

    Mat scaled(const Elem& c) const {
        Mat r(field_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], c);
        return r;
    }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    // matrix with row i and column j removed
    Mat minor_matrix(int i, int j) const {
        Mat r(field_, rows_ - 1, cols_ - 1);
        for (int a = 0, ra = 0; a < rows_; ++a) {
            if (a == i) continue;
            for (int b = 0, rb = 0; b < cols_; ++b) {
                if (b == j) continue;
                r(ra, rb) = (*this)(a, b);
                ++rb;
            }
            ++ra;
        }
        return r;
    }

  private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

namespace detail {

// Fraction-free (Bareiss) determinant for rational matrices: rows are scaled
// integral first, then all intermediate divisions are exact.
inline Rational det_bareiss(Mat<RationalField> m) {
    const int n = m.rows();
    if (n == 0) return Rational(1);
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        boost::multiprecision::mpz_int l(1);
        for (int j = 0; j < n; ++j) {
            auto d = denominator(m(i, j));
            l = l / gcd(l, d) * d;
        }
        if (l != 1) {
            Rational f(l);
            for (int j = 0; j < n; ++j) m(i, j) *= f;
            scale *= f;
        }
    }
    Rational prev(1);
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j)
                m(r, j) = (m(c, c) * m(r, j) - m(r, c) * m(c, j)) / prev;
            m(r, c) = Rational(0);
        }
        prev = m(c, c);
    }
    Rational d = m(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d / scale;
}

template <class F>
typename F::Elem det_elimination(Mat<F> m) {
    const auto& k = m.field();
    const int n = m.rows();
    auto det = k.one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!k.is_zero(m(r, c))) {
                piv = r;
                break;
            }
        if (piv < 0) return k.zero();
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = k.neg(det);
        }
        det = k.mul(det, m(c, c));
        auto inv = k.inv(m(c, c));
        for (int r = c + 1; r < n; ++r) {
            if (k.is_zero(m(r, c))) continue;
            auto f = k.mul(m(r, c), inv);
            for (int j = c + 1; j < n; ++j) m(r, j) = k.sub(m(r, j), k.mul(f, m(c, j)));
            m(r, c) = k.zero();
        }
    }
    return det;
}

}  // namespace detail

template <class F>
typename F::Elem determinant(const Mat<F>& m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    if (m.rows() == 0) return m.field().one();
    if constexpr (std::is_same_v<F, RationalField>)
        return detail::det_bareiss(m);
    else
        return detail::det_elimination(m);
}

template <class F>
struct RankKernel {
    int rank = 0;
    std::vector<std::vector<typename F::Elem>> kernel;  // basis of right kernel
};

// Reduced row echelon rank + kernel.  Pivot = first nonzero entry in the
// column, scanned top-down (deterministic given input order).
template <class F>
RankKernel<F> rank_kernel(Mat<F> m) {
    const auto& k = m.field();
    const int nr = m.rows(), nc = m.cols();
    std::vector<int> pivot_row_of_col(nc, -1);
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (!k.is_zero(m(i, c))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < nc; ++j) std::swap(m(r, j), m(piv, j));
        auto inv = k.inv(m(r, c));
        for (int j = c; j < nc; ++j) m(r, j) = k.mul(m(r, j), inv);
        for (int i = 0; i < nr; ++i) {
            if (i == r || k.is_zero(m(i, c))) continue;
            auto f = m(i, c);
            for (int j = c; j < nc; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
        }
        pivot_row_of_col[c] = r;
        ++r;
    }
    RankKernel<F> out;
    out.rank = r;
    for (int c = 0; c < nc; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<typename F::Elem> v(nc, k.zero());
        v[c] = k.one();
        for (int c2 = 0; c2 < nc; ++c2)
            if (pivot_row_of_col[c2] >= 0) v[c2] = k.neg(m(pivot_row_of_col[c2], c));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class F>
int rank_of(const Mat<F>& m) {
    return rank_kernel(m).rank;
}

// Signed-minor (cofactor transpose) adjugate; defined for singular inputs.
// Satisfies M * adj(M) = det(M) * I;  rank <= m-2 gives the zero matrix.
template <class F>
Mat<F> adjugate(const Mat<F>& m) {
    if (!m.is_square()) throw DimensionError("adjugate of non-square matrix");
    const auto& k = m.field();
    const int n = m.rows();
    if (n == 1) {
        Mat<F> r(m.field(), 1, 1);
        r(0, 0) = k.one();
        return r;
    }
    Mat<F> r(m.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto d = determinant(m.minor_matrix(j, i));
            r(i, j) = ((i + j) & 1) ? k.neg(d) : d;
        }
    return r;
}

namespace detail {
template <class F>
typename F::Elem pfaffian_rec(const Mat<F>& m, std::vector<int>& idx) {
    const auto& k = m.field();
    const std::size_t n = idx.size();
    if (n == 0) return k.one();
    auto total = k.zero();
    const int i0 = idx[0];
    for (std::size_t j = 1; j < n; ++j) {
        const auto& mij = m(i0, idx[j]);
        if (k.is_zero(mij)) continue;
        std::vector<int> rest;
        rest.reserve(n - 2);
        for (std::size_t t = 1; t < n; ++t)
            if (t != j) rest.push_back(idx[t]);
        auto term = k.mul(mij, pfaffian_rec(m, rest));
        total = (j & 1) ? k.add(total, term) : k.sub(total, term);
    }
    return total;
}
}  // namespace detail

// Pfaffian of an even-size skew-symmetric matrix; pf(M)^2 = det(M).
template <class F>
typename F::Elem pfaffian(const Mat<F>& m) {
    if (!m.is_square()) throw DimensionError("pfaffian of non-square matrix");
    if (m.rows() % 2 != 0) throw StructureError("pfaffian needs even dimension");
    if (!m.is_skew()) throw StructureError("pfaffian needs a skew-symmetric matrix");
    std::vector<int> idx(m.rows());
    for (int i = 0; i < m.rows(); ++i) idx[i] = i;
    return detail::pfaffian_rec(m, idx);
}

}  // namespace catrec

#endif

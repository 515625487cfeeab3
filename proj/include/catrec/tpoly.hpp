#ifndef CATREC_TPOLY_HPP
#define CATREC_TPOLY_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "catrec/matrix.hpp"

namespace catrec {

// Univariate polynomial in a deformation parameter, coefficients ascending.
template <class F>
class TPoly {
  public:
    using Elem = typename F::Elem;

    explicit TPoly(F field) : field_(std::move(field)) {}
    TPoly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {}

    const F& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    Elem coeff(int d) const { return d < static_cast<int>(c_.size()) ? c_[d] : field_.zero(); }

    int degree() const {
        for (int d = static_cast<int>(c_.size()) - 1; d >= 0; --d)
            if (!field_.is_zero(c_[d])) return d;
        return -1;  // zero polynomial
    }

    // smallest d with nonzero coefficient, or -1 for the zero polynomial
    int valuation() const {
        for (int d = 0; d < static_cast<int>(c_.size()); ++d)
            if (!field_.is_zero(c_[d])) return d;
        return -1;
    }

    bool is_zero() const { return valuation() < 0; }

    Elem eval(const Elem& t) const {
        auto acc = field_.zero();
        for (int d = static_cast<int>(c_.size()) - 1; d >= 0; --d)
            acc = field_.add(field_.mul(acc, t), c_[d]);
        return acc;
    }

  private:
    F field_;
    std::vector<Elem> c_;
};

// Matrix whose entries are univariate polynomials.
template <class F>
struct TPolyMat {
    F field;
    int rows = 0, cols = 0;
    std::vector<TPoly<F>> entries;  // row-major

    const TPoly<F>& operator()(int i, int j) const { return entries[i * cols + j]; }

    int valuation() const {
        int v = -1;
        for (const auto& e : entries) {
            int ev = e.valuation();
            if (ev >= 0 && (v < 0 || ev < v)) v = ev;
        }
        return v;
    }

    Mat<F> coeff_matrix(int d) const {
        Mat<F> m(field, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).coeff(d);
        return m;
    }

    Mat<F> eval(const typename F::Elem& t) const {
        Mat<F> m(field, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).eval(t);
        return m;
    }
};

namespace detail {

// Coefficients of the Lagrange basis polynomials for nodes 1..n:
// W[i][d] = coefficient of x^d in L_i.  Needs n distinct nonzero node values,
// so a prime field modulus must exceed n.
template <class F>
std::vector<std::vector<typename F::Elem>> lagrange_basis_coeffs(const F& k, int n) {
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (static_cast<std::uint64_t>(n) >= k.modulus())
            throw FieldError("field too small for interpolation nodes");
    }
    std::vector<std::vector<typename F::Elem>> w(n);
    for (int i = 0; i < n; ++i) {
        std::vector<typename F::Elem> num{k.one()};
        auto den = k.one();
        auto ti = k.from_int(i + 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            auto tj = k.from_int(j + 1);
            std::vector<typename F::Elem> nxt(num.size() + 1, k.zero());
            for (std::size_t d = 0; d < num.size(); ++d) {
                nxt[d] = k.sub(nxt[d], k.mul(tj, num[d]));
                nxt[d + 1] = k.add(nxt[d + 1], num[d]);
            }
            num = std::move(nxt);
            den = k.mul(den, k.sub(ti, tj));
        }
        auto dinv = k.inv(den);
        for (auto& c : num) c = k.mul(c, dinv);
        w[i] = std::move(num);
    }
    return w;
}

}  // namespace detail

// adj(A(t)) for a polynomial matrix curve A(t) = sum t^j curve[j], computed by
// evaluating the adjugate at distinct field points and Lagrange-interpolating.
// Entry degrees are bounded by (m-1)*deg(curve).
template <class F>
TPolyMat<F> adjugate_tpoly_curve(const std::vector<Mat<F>>& curve) {
    if (curve.empty()) throw InputError("empty matrix curve");
    const F& k = curve[0].field();
    const int m = curve[0].rows();
    for (const auto& c : curve)
        if (!c.is_square() || c.rows() != m) throw DimensionError("curve matrices must be square, equal size");
    const int deg = (m - 1) * (static_cast<int>(curve.size()) - 1);
    const int nodes = deg + 1;
    auto w = detail::lagrange_basis_coeffs(k, nodes);

    TPolyMat<F> out{k, m, m, {}};
    std::vector<std::vector<typename F::Elem>> acc(
        static_cast<std::size_t>(m) * m, std::vector<typename F::Elem>(nodes, k.zero()));
    for (int node = 0; node < nodes; ++node) {
        auto t = k.from_int(node + 1);
        Mat<F> a(k, m, m);
        auto tp = k.one();
        for (const auto& c : curve) {
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) a(i, j) = k.add(a(i, j), k.mul(tp, c(i, j)));
            tp = k.mul(tp, t);
        }
        Mat<F> adj = adjugate(a);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const auto& v = adj(i, j);
                if (k.is_zero(v)) continue;
                auto& dst = acc[static_cast<std::size_t>(i) * m + j];
                for (int d = 0; d < nodes; ++d)
                    if (!k.is_zero(w[node][d])) dst[d] = k.add(dst[d], k.mul(v, w[node][d]));
            }
    }
    out.entries.reserve(acc.size());
    for (auto& c : acc) out.entries.emplace_back(k, std::move(c));
    return out;
}

// adj(A + tX) with entries of degree <= m-1 (Lagrange nodes t = 1..m).
template <class F>
TPolyMat<F> adjugate_tpoly(const Mat<F>& a, const Mat<F>& x) {
    return adjugate_tpoly_curve<F>({a, x});
}

// Bivariate term list for iterated limits: M(t,u) = sum t^e u^f * mat.
template <class F>
struct BivariateTerm {
    int t_exp, u_exp;
    Mat<F> mat;
};

namespace detail {
template <class F>
typename F::Elem int_pow(const F& k, typename F::Elem base, int e) {
    auto acc = k.one();
    for (int i = 0; i < e; ++i) acc = k.mul(acc, base);
    return acc;
}
}  // namespace detail

// Strip the minimum t-valuation (coefficients read as polynomials in u), then
// the minimum u-valuation.  Returns (t_val, u_val, coefficient matrix).
template <class F>
std::tuple<int, int, Mat<F>> iterated_strip(const std::vector<BivariateTerm<F>>& terms) {
    if (terms.empty()) throw InputError("empty bivariate term list");
    const F& k = terms[0].mat.field();
    const int m = terms[0].mat.rows();
    int tmax = 0, umax = 0;
    for (const auto& t : terms) {
        tmax = std::max(tmax, t.t_exp);
        umax = std::max(umax, t.u_exp);
    }
    const int tdeg = (m - 1) * tmax, udeg = (m - 1) * umax;
    const int tn = tdeg + 1, un = udeg + 1;
    auto wt = detail::lagrange_basis_coeffs(k, tn);
    auto wu = detail::lagrange_basis_coeffs(k, un);

    // adjugates on the node grid
    std::vector<Mat<F>> grid;
    grid.reserve(static_cast<std::size_t>(tn) * un);
    for (int a = 0; a < tn; ++a) {
        auto tv = k.from_int(a + 1);
        for (int b = 0; b < un; ++b) {
            auto uv = k.from_int(b + 1);
            Mat<F> mat(k, m, m);
            for (const auto& term : terms) {
                auto f = k.mul(detail::int_pow(k, tv, term.t_exp),
                               detail::int_pow(k, uv, term.u_exp));
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        mat(i, j) = k.add(mat(i, j), k.mul(f, term.mat(i, j)));
            }
            grid.push_back(adjugate(mat));
        }
    }

    auto coeff_at = [&](int dt, int du) {
        Mat<F> c(k, m, m);
        for (int a = 0; a < tn; ++a) {
            if (k.is_zero(wt[a][dt])) continue;
            for (int b = 0; b < un; ++b) {
                if (k.is_zero(wu[b][du])) continue;
                auto f = k.mul(wt[a][dt], wu[b][du]);
                const auto& g = grid[static_cast<std::size_t>(a) * un + b];
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j)
                        c(i, j) = k.add(c(i, j), k.mul(f, g(i, j)));
            }
        }
        return c;
    };

    for (int dt = 0; dt <= tdeg; ++dt) {
        std::vector<Mat<F>> ucoeffs;
        bool any = false;
        for (int du = 0; du <= udeg; ++du) {
            ucoeffs.push_back(coeff_at(dt, du));
            if (!ucoeffs.back().is_zero()) any = true;
        }
        if (!any) continue;
        for (int du = 0; du <= udeg; ++du)
            if (!ucoeffs[du].is_zero()) return {dt, du, ucoeffs[du]};
    }
    throw StructureError("iterated strip of an identically zero adjugate curve");
}

}  // namespace catrec

#endif

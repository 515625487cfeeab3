#ifndef CATREC_CATSPACE_HPP
#define CATREC_CATSPACE_HPP

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catrec/matrix.hpp"
#include "catrec/monomial.hpp"
#include "catrec/rng.hpp"

namespace catrec {

// Catalecticant linear space of symmetric matrices: rows and columns carry
// the degree-k monomials in n+1 variables (graded-lex descending); the entry
// at (i, j) is the coefficient indexed by the monomial sum of the two labels.
struct CatSpace {
    int k = 0, n = 0;
    int m = 0;    // matrix size = #degree-k monomials
    int dim = 0;  // #degree-2k monomials
    std::vector<Monomial> row_labels;    // m of them, degree k
    std::vector<Monomial> coeff_labels;  // dim of them, degree 2k
    std::vector<int> entry_coeff;        // m*m -> coefficient index
    // per coefficient class, the unordered entry pairs (i <= j) carrying it
    std::vector<std::vector<std::pair<int, int>>> classes;

    int coeff_of_entry(int i, int j) const { return entry_coeff[static_cast<std::size_t>(i) * m + j]; }
    int sym_dim() const { return m * (m + 1) / 2; }     // #entries of Sym^m
    int codim() const { return sym_dim() - dim; }       // codimension in Sym^m
    int coeff_index(const Monomial& mono) const;
};

inline CatSpace build_cat_space(int k, int n) {
    if (k < 1 || n < 1) throw InputError("build_cat_space requires k, n >= 1");
    CatSpace s;
    s.k = k;
    s.n = n;
    std::uint64_t m64 = binomial(n + k, k), d64 = binomial(2 * k + n, 2 * k);
    if (m64 > 512 || d64 > 100000) throw SizeError("catalecticant space beyond configured size bound");
    s.m = static_cast<int>(m64);
    s.dim = static_cast<int>(d64);
    s.row_labels = monomials_of_degree(n + 1, k);
    MonomialTable coeffs(n + 1, 2 * k);
    s.coeff_labels = coeffs.list();
    s.entry_coeff.resize(static_cast<std::size_t>(s.m) * s.m);
    s.classes.resize(s.dim);
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j) {
            int a = coeffs.index(monomial_sum(s.row_labels[i], s.row_labels[j]));
            s.entry_coeff[static_cast<std::size_t>(i) * s.m + j] = a;
            if (i <= j) s.classes[a].emplace_back(i, j);
        }
    return s;
}

inline int CatSpace::coeff_index(const Monomial& mono) const {
    for (int a = 0; a < dim; ++a)
        if (coeff_labels[a] == mono) return a;
    throw InputError("monomial is not a coefficient label of this space");
}

// A point of the space: coefficient vector plus its realized matrix.
template <class F>
struct CatPoint {
    std::vector<typename F::Elem> coeffs;
    Mat<F> matrix;
};

template <class F>
Mat<F> coeffs_to_matrix(const CatSpace& s, const F& k,
                        const std::vector<typename F::Elem>& coeffs) {
    if (static_cast<int>(coeffs.size()) != s.dim) throw DimensionError("coefficient vector size");
    Mat<F> m(k, s.m, s.m);
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j) m(i, j) = coeffs[s.coeff_of_entry(i, j)];
    return m;
}

template <class F>
CatPoint<F> make_cat_point(const CatSpace& s, const F& k,
                           std::vector<typename F::Elem> coeffs) {
    auto m = coeffs_to_matrix(s, k, coeffs);
    return CatPoint<F>{std::move(coeffs), std::move(m)};
}

// Membership: true iff all entries indexed by the same monomial sum agree;
// returns the coefficient vector read off the matrix.
template <class F>
std::optional<std::vector<typename F::Elem>> matrix_to_coeffs(const CatSpace& s,
                                                              const Mat<F>& m) {
    if (m.rows() != s.m || m.cols() != s.m) throw DimensionError("matrix size vs space");
    const auto& k = m.field();
    std::vector<typename F::Elem> coeffs(s.dim, k.zero());
    std::vector<bool> seen(s.dim, false);
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j) {
            int a = s.coeff_of_entry(i, j);
            if (!seen[a]) {
                coeffs[a] = m(i, j);
                seen[a] = true;
            } else if (!k.eq(coeffs[a], m(i, j))) {
                return std::nullopt;
            }
        }
    return coeffs;
}

// Rank-1 point: coefficients a_alpha = p^alpha (no multinomial factors); the
// realized matrix is the outer product of the degree-k monomial vector of p.
template <class F>
std::vector<typename F::Elem> veronese_coeffs(const CatSpace& s, const F& k,
                                              const std::vector<typename F::Elem>& p) {
    if (static_cast<int>(p.size()) != s.n + 1) throw DimensionError("point has wrong length");
    bool nonzero = false;
    for (const auto& c : p)
        if (!k.is_zero(c)) nonzero = true;
    if (!nonzero) throw InputError("veronese point of the zero vector");
    std::vector<typename F::Elem> out;
    out.reserve(s.dim);
    for (const auto& alpha : s.coeff_labels) {
        auto v = k.one();
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int e = 0; e < alpha[i]; ++e) v = k.mul(v, p[i]);
        out.push_back(v);
    }
    return out;
}

template <class F>
CatPoint<F> veronese_point(const CatSpace& s, const F& k,
                           const std::vector<typename F::Elem>& p) {
    return make_cat_point(s, k, veronese_coeffs(s, k, p));
}

// Sum of r random veronese points with random nonzero scalars; rank <= r
// always, and equal to the generic rank of the r-th locus with probability
// 1 - O(r/|field|).
template <class F>
CatPoint<F> rank_r_point(const CatSpace& s, const F& k, int r, RngStream& rng) {
    if (r < 1 || r > s.m) throw InputError("rank_r_point: r out of range");
    std::vector<typename F::Elem> coeffs(s.dim, k.zero());
    for (int t = 0; t < r; ++t) {
        std::vector<typename F::Elem> p(s.n + 1);
        bool nonzero = false;
        do {
            for (auto& c : p) {
                c = k.random(rng);
                if (!k.is_zero(c)) nonzero = true;
            }
        } while (!nonzero);
        auto lambda = [&] {
            if constexpr (std::is_same_v<F, PrimeField>)
                return k.random_nonzero(rng);
            else {
                auto v = k.random(rng);
                while (k.is_zero(v)) v = k.random(rng);
                return v;
            }
        }();
        auto ver = veronese_coeffs(s, k, p);
        for (int a = 0; a < s.dim; ++a) coeffs[a] = k.add(coeffs[a], k.mul(lambda, ver[a]));
    }
    return make_cat_point(s, k, std::move(coeffs));
}

// Field-independent sparse symmetric pattern: entries (i, j, integer value),
// stored once per (i <= j).
struct SparseSymPattern {
    std::vector<std::tuple<int, int, std::int64_t>> entries;

    template <class F>
    Mat<F> realize(const F& k, int m) const {
        Mat<F> out(k, m, m);
        for (const auto& [i, j, v] : entries) {
            out(i, j) = k.from_int(v);
            if (i != j) out(j, i) = k.from_int(v);
        }
        return out;
    }
};

// Basis of the trace-orthogonal complement of the space inside Sym^m.  For a
// class with pairs p0, p1, ..., each further pair p yields the matrix with
// w(p0) at p and -w(p) at p0, where w is 2 off the diagonal and 1 on it
// (trace(E_alpha * Y) sums both symmetric copies).  Basis size = sym_dim - dim.
inline std::vector<SparseSymPattern> orthogonal_basis(const CatSpace& s) {
    std::vector<SparseSymPattern> out;
    auto weight = [](std::pair<int, int> p) -> std::int64_t { return p.first == p.second ? 1 : 2; };
    for (const auto& cls : s.classes) {
        if (cls.size() < 2) continue;
        auto p0 = cls[0];
        for (std::size_t t = 1; t < cls.size(); ++t) {
            auto p = cls[t];
            SparseSymPattern y;
            y.entries.emplace_back(p.first, p.second, weight(p0));
            y.entries.emplace_back(p0.first, p0.second, -weight(p));
            out.push_back(std::move(y));
        }
    }
    return out;
}

// trace(E_alpha * Y) for every coefficient class; Y is orthogonal iff all
// vanish.
template <class F>
std::vector<typename F::Elem> class_traces(const CatSpace& s, const Mat<F>& y) {
    const auto& k = y.field();
    std::vector<typename F::Elem> tr(s.dim, k.zero());
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j) {
            int a = s.coeff_of_entry(i, j);
            tr[a] = k.add(tr[a], y(i, j));
        }
    return tr;
}

template <class F>
bool in_orthogonal(const CatSpace& s, const Mat<F>& y) {
    const auto& k = y.field();
    for (const auto& t : class_traces(s, y))
        if (!k.is_zero(t)) return false;
    return true;
}

// --- first-order jet machinery -------------------------------------------

// Projective dimension of the image of a parametrized algebraic map, read off
// as rank[value | directional derivatives] - 1 at a random parameter point.
// `lift` maps jet-ring parameter vectors to jet-ring lift vectors.
template <class Lift>
int projective_jet_dimension(const PrimeField& k, int num_params, Lift&& lift, RngStream& rng) {
    JetFp jr(k);
    std::vector<JetFp::Elem> params(num_params);
    std::vector<std::uint64_t> base(num_params);
    for (int i = 0; i < num_params; ++i) base[i] = k.random(rng);
    // value column
    for (int i = 0; i < num_params; ++i) params[i] = jr.constant(base[i]);
    auto val = lift(jr, params);
    const int ambient = static_cast<int>(val.size());
    Mat<PrimeField> jet(k, ambient, num_params + 1);
    for (int r = 0; r < ambient; ++r) jet(r, 0) = val[r].val;
    for (int c = 0; c < num_params; ++c) {
        params[c] = jr.variable(base[c]);
        auto col = lift(jr, params);
        params[c] = jr.constant(base[c]);
        for (int r = 0; r < ambient; ++r) jet(r, c + 1) = col[r].der;
    }
    return rank_of(jet) - 1;
}

// Projective dimension of the rank-<=r locus via jets of the parametrization
// (p_1..p_r, lambda_1..lambda_r) -> sum lambda_i * veronese(p_i).
inline int secant_dimension_single(const CatSpace& s, int r, std::uint64_t prime,
                                   std::uint64_t seed) {
    if (r < 1 || r > s.m) throw InputError("secant_dimension: r out of range");
    PrimeField k(prime);
    RngStream rng(seed);
    const int np = r * (s.n + 1) + r;
    auto lift = [&](const JetFp& jr, const std::vector<JetFp::Elem>& params) {
        std::vector<JetFp::Elem> acc(s.dim, jr.zero());
        for (int t = 0; t < r; ++t) {
            std::vector<JetFp::Elem> p(params.begin() + t * (s.n + 1),
                                       params.begin() + (t + 1) * (s.n + 1));
            auto lambda = params[r * (s.n + 1) + t];
            auto ver = veronese_coeffs(s, jr, p);
            for (int a = 0; a < s.dim; ++a) acc[a] = jr.add(acc[a], jr.mul(lambda, ver[a]));
        }
        return acc;
    };
    return projective_jet_dimension(k, np, lift, rng);
}

// Two primes, two random base points each; all four runs must agree.
inline int secant_dimension(const CatSpace& s, int r, std::uint64_t prime1, std::uint64_t prime2,
                            std::uint64_t seed) {
    int v = -2;
    for (auto p : {prime1, prime2})
        for (std::uint64_t pt = 0; pt < 2; ++pt) {
            int d = secant_dimension_single(s, r, p, seed + 1000 * pt + (p == prime1 ? 0 : 1));
            if (v == -2)
                v = d;
            else if (v != d)
                throw PrimeCollisionError("secant dimension disagreement across primes/points");
        }
    return v;
}

}  // namespace catrec

#endif

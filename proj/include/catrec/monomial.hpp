#ifndef CATREC_MONOMIAL_HPP
#define CATREC_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "catrec/errors.hpp"

namespace catrec {

// Exponent vector of a monomial; the sum of entries is the degree.
using Monomial = std::vector<int>;

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at every step
    }
    return r;
}

// All degree-d monomials in nvars variables, graded-lex descending
// (x0 > x1 > ... listed from highest leading exponent down).
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    out.reserve(binomial(nvars + d - 1, d));
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur[var] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

inline Monomial monomial_sum(const Monomial& a, const Monomial& b) {
    Monomial s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}

// Lookup from exponent vector to position in the graded-lex list.
class MonomialTable {
  public:
    MonomialTable() = default;
    MonomialTable(int nvars, int d) : list_(monomials_of_degree(nvars, d)) {
        for (std::size_t i = 0; i < list_.size(); ++i) index_[list_[i]] = static_cast<int>(i);
    }

    const std::vector<Monomial>& list() const { return list_; }
    int size() const { return static_cast<int>(list_.size()); }

    int index(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw InputError("monomial not in table");
        return it->second;
    }

  private:
    std::vector<Monomial> list_;
    std::map<Monomial, int> index_;
};

// Values of all degree-d monomials at a point, in graded-lex order.  The
// recursion shares prefix products, so the cost is linear in the output.
template <class F>
std::vector<typename F::Elem> evaluate_monomials(const F& k,
                                                 const std::vector<typename F::Elem>& point,
                                                 int d) {
    const int nvars = static_cast<int>(point.size());
    std::vector<typename F::Elem> out;
    out.reserve(binomial(nvars + d - 1, d));
    // powers[v][e] = point[v]^e
    std::vector<std::vector<typename F::Elem>> powers(nvars);
    for (int v = 0; v < nvars; ++v) {
        powers[v].resize(d + 1);
        powers[v][0] = k.one();
        for (int e = 1; e <= d; ++e) powers[v][e] = k.mul(powers[v][e - 1], point[v]);
    }
    auto rec = [&](auto&& self, int var, int rem, typename F::Elem prefix) -> void {
        if (var == nvars - 1) {
            out.push_back(k.mul(prefix, powers[var][rem]));
            return;
        }
        for (int e = rem; e >= 0; --e)
            self(self, var + 1, rem - e, k.mul(prefix, powers[var][e]));
    };
    rec(rec, 0, d, k.one());
    return out;
}

}  // namespace catrec

#endif

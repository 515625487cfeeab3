#ifndef CATREC_FIELD_HPP
#define CATREC_FIELD_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>

#include "catrec/errors.hpp"
#include "catrec/rng.hpp"

namespace catrec {

using Rational = boost::multiprecision::mpq_rational;

// Default word-sized primes near 2^62.  Rank-based results are recomputed
// under a second independent prime and must agree.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;
inline constexpr std::uint64_t kDefaultPrime2 = 4611686018427387817ULL;
inline constexpr std::uint64_t kExtraPrimes[] = {4611686018427387787ULL, 4611686018427387761ULL,
                                                 4611686018427387751ULL, 4611686018427387737ULL};

// Prime field with odd modulus p < 2^63.  Elements are kept in Montgomery
// form (R = 2^64); the representation is canonical, so equality of elements
// is equality of representatives.
class PrimeField {
  public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 3 || (p & 1) == 0 || p >= (1ULL << 63))
            throw FieldError("prime field modulus must be odd and < 2^63");
        std::uint64_t inv = p;  // Newton: inv = p^{-1} mod 2^64
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        r1_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
        r2_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r1_) * r1_ % p);
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return r1_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem mul(Elem a, Elem b) const {
        unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
        std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
        t += static_cast<unsigned __int128>(m) * p_;
        std::uint64_t r = static_cast<std::uint64_t>(t >> 64);
        return r >= p_ ? r - p_ : r;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw FieldError("inverse of zero");
        return pow(a, p_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_uint(std::uint64_t v) const { return mul(v % p_, r2_); }
    Elem from_int(std::int64_t v) const {
        return v >= 0 ? from_uint(static_cast<std::uint64_t>(v))
                      : neg(from_uint(static_cast<std::uint64_t>(-v)));
    }
    std::uint64_t canonical(Elem a) const {
        // Montgomery reduce by multiplying with 1
        unsigned __int128 t = a;
        std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
        t += static_cast<unsigned __int128>(m) * p_;
        std::uint64_t r = static_cast<std::uint64_t>(t >> 64);
        return r >= p_ ? r - p_ : r;
    }

    Elem random(RngStream& rng) const { return from_uint(rng.below(p_)); }
    Elem random_nonzero(RngStream& rng) const { return from_uint(1 + rng.below(p_ - 1)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::uint64_t p_, neg_inv_, r1_, r2_;
};

// Exact rationals (GMP-backed).
class RationalField {
  public:
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw FieldError("inverse of zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem from_int(std::int64_t v) const { return Elem(v); }
    Elem random(RngStream& rng) const { return Elem(rng.small_int(1000)); }

    bool operator==(const RationalField&) const { return true; }
};

// Truncated dual numbers a + b*eps, eps^2 = 0, over a base field.  A
// commutative ring, not a field: a + b*eps is invertible iff a != 0.  Used
// for first-order jets of algebraic maps.
template <class F>
class JetRing {
  public:
    struct Elem {
        typename F::Elem val, der;
    };

    explicit JetRing(F base) : base_(std::move(base)) {}
    const F& base() const { return base_; }

    Elem zero() const { return {base_.zero(), base_.zero()}; }
    Elem one() const { return {base_.one(), base_.zero()}; }
    Elem constant(typename F::Elem v) const { return {v, base_.zero()}; }
    // value v with derivative seed 1
    Elem variable(typename F::Elem v) const { return {v, base_.one()}; }

    bool is_zero(const Elem& a) const { return base_.is_zero(a.val) && base_.is_zero(a.der); }
    bool eq(const Elem& a, const Elem& b) const {
        return base_.eq(a.val, b.val) && base_.eq(a.der, b.der);
    }
    Elem add(const Elem& a, const Elem& b) const {
        return {base_.add(a.val, b.val), base_.add(a.der, b.der)};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return {base_.sub(a.val, b.val), base_.sub(a.der, b.der)};
    }
    Elem neg(const Elem& a) const { return {base_.neg(a.val), base_.neg(a.der)}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return {base_.mul(a.val, b.val),
                base_.add(base_.mul(a.val, b.der), base_.mul(a.der, b.val))};
    }
    Elem inv(const Elem& a) const {
        auto iv = base_.inv(a.val);
        // (a + b eps)^-1 = 1/a - (b/a^2) eps
        return {iv, base_.neg(base_.mul(a.der, base_.mul(iv, iv)))};
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem from_int(std::int64_t v) const { return constant(base_.from_int(v)); }

    bool operator==(const JetRing& o) const { return base_ == o.base_; }

  private:
    F base_;
};

using JetFp = JetRing<PrimeField>;

}  // namespace catrec

#endif

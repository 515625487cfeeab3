#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catrec/field.hpp>
#include <catrec/matrix.hpp>
#include <catrec/rng.hpp>

using namespace catrec;

namespace {

template <class F>
Mat<F> random_matrix(const F& k, int r, int c, RngStream& rng) {
    Mat<F> m(k, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = k.random(rng);
    return m;
}

// independent oracle: determinant by recursive cofactor expansion
template <class F>
typename F::Elem det_cofactor_oracle(const Mat<F>& m) {
    const auto& k = m.field();
    const int n = m.rows();
    if (n == 0) return k.one();
    if (n == 1) return m(0, 0);
    auto total = k.zero();
    for (int j = 0; j < n; ++j) {
        if (k.is_zero(m(0, j))) continue;
        auto term = k.mul(m(0, j), det_cofactor_oracle(m.minor_matrix(0, j)));
        total = (j & 1) ? k.sub(total, term) : k.add(total, term);
    }
    return total;
}

// independent oracle: rank by naive Gaussian elimination with full pivot scan
template <class F>
int rank_naive_oracle(Mat<F> m) {
    const auto& k = m.field();
    int rank = 0;
    int rows = m.rows(), cols = m.cols();
    int row = 0;
    for (int c = 0; c < cols && row < rows; ++c) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!k.is_zero(m(r, c))) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m(row, j), m(piv, j));
        for (int r = row + 1; r < rows; ++r) {
            if (k.is_zero(m(r, c))) continue;
            auto f = k.div(m(r, c), m(row, c));
            for (int j = 0; j < cols; ++j) m(r, j) = k.sub(m(r, j), k.mul(f, m(row, j)));
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("prime field arithmetic round trips") {
    PrimeField k(kDefaultPrime);
    RngStream rng(1);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng.below(kDefaultPrime), b = rng.below(kDefaultPrime);
        auto ea = k.from_uint(a), eb = k.from_uint(b);
        CHECK(k.canonical(ea) == a);
        CHECK(k.canonical(k.add(ea, eb)) ==
              (a + b >= kDefaultPrime ? a + b - kDefaultPrime : a + b));
        auto prod = k.canonical(k.mul(ea, eb));
        CHECK(prod == static_cast<std::uint64_t>(
                          (static_cast<unsigned __int128>(a) * b) % kDefaultPrime));
        if (a != 0) CHECK(k.eq(k.mul(ea, k.inv(ea)), k.one()));
    }
    CHECK(k.canonical(k.from_int(-1)) == kDefaultPrime - 1);
}

TEST_CASE("small prime field is exhaustively consistent") {
    PrimeField k(101);
    for (std::uint64_t a = 0; a < 101; ++a)
        for (std::uint64_t b = 1; b < 101; ++b) {
            auto q = k.div(k.from_uint(a), k.from_uint(b));
            CHECK(k.canonical(k.mul(q, k.from_uint(b))) == a);
        }
}

TEST_CASE("rank_kernel basics") {
    PrimeField k(kDefaultPrime);
    auto id = Mat<PrimeField>::identity(k, 3);
    auto rk = rank_kernel(id);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.empty());

    Mat<PrimeField> z(k, 2, 4);
    auto rkz = rank_kernel(z);
    CHECK(rkz.rank == 0);
    CHECK(rkz.kernel.size() == 4);

    Mat<PrimeField> empty(k, 0, 0);
    CHECK(rank_kernel(empty).rank == 0);
}

TEST_CASE("rank_kernel matches the naive oracle over two primes") {
    for (std::uint64_t p : {10007ULL, 30011ULL}) {
        PrimeField k(p);
        RngStream rng(p);
        for (int trial = 0; trial < 300; ++trial) {
            int r = 1 + static_cast<int>(rng.below(6));
            int c = 1 + static_cast<int>(rng.below(6));
            Mat<PrimeField> m(k, r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    m(i, j) = k.from_int(rng.small_int(3));  // frequent zeros and collisions
            auto rk = rank_kernel(m);
            CHECK(rk.rank == rank_naive_oracle(m));
            CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == c);
            for (const auto& v : rk.kernel) {
                for (int i = 0; i < r; ++i) {
                    auto acc = k.zero();
                    for (int j = 0; j < c; ++j) acc = k.add(acc, k.mul(m(i, j), v[j]));
                    CHECK(k.is_zero(acc));
                }
            }
        }
    }
}

TEST_CASE("determinant agrees with cofactor oracle on random rational 4x4") {
    RationalField q;
    RngStream rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Mat<RationalField> m(q, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                m(i, j) = Rational(rng.small_int(9), 1 + rng.below(7));
        CHECK(determinant(m) == det_cofactor_oracle(m));
    }
}

TEST_CASE("determinant identity and rank deficiency") {
    PrimeField k(kDefaultPrime);
    CHECK(k.eq(determinant(Mat<PrimeField>::identity(k, 5)), k.one()));
    RngStream rng(3);
    // rank-2 product has zero determinant
    auto a = random_matrix(k, 4, 2, rng), b = random_matrix(k, 2, 4, rng);
    CHECK(k.is_zero(determinant(a * b)));
}

TEST_CASE("adjugate identities") {
    PrimeField k(kDefaultPrime);
    RngStream rng(11);
    CHECK(adjugate(Mat<PrimeField>::identity(k, 4)) == Mat<PrimeField>::identity(k, 4));
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(k, 6, 6, rng);
        auto adj = adjugate(m);
        auto d = determinant(m);
        CHECK(m * adj == Mat<PrimeField>::identity(k, 6).scaled(d));
        if (!k.is_zero(d)) {
            // adj(adj(A)) = det(A)^{m-2} A
            auto d4 = k.mul(k.mul(d, d), k.mul(d, d));
            CHECK(adjugate(adj) == m.scaled(d4));
        }
    }
    // symmetric rank-4 6x6 has zero adjugate
    auto c = random_matrix(k, 6, 4, rng);
    auto low = c * c.transposed();
    CHECK(rank_of(low) <= 4);
    CHECK(adjugate(low).is_zero());
}

TEST_CASE("adjugate rejects non-square input") {
    PrimeField k(kDefaultPrime);
    Mat<PrimeField> m(k, 2, 3);
    CHECK_THROWS_AS(adjugate(m), DimensionError);
    CHECK_THROWS_AS(determinant(m), DimensionError);
}

TEST_CASE("pfaffian small cases and oracle") {
    RationalField q;
    // [[0, a], [-a, 0]] -> a
    Mat<RationalField> m2(q, 2, 2);
    m2(0, 1) = Rational(7);
    m2(1, 0) = Rational(-7);
    CHECK(pfaffian(m2) == Rational(7));

    // classical 4x4 expansion a12 a34 - a13 a24 + a14 a23
    RngStream rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Mat<RationalField> m(q, 4, 4);
        auto set = [&](int i, int j, std::int64_t v) {
            m(i, j) = Rational(v);
            m(j, i) = Rational(-v);
        };
        std::int64_t a12 = rng.small_int(9), a13 = rng.small_int(9), a14 = rng.small_int(9);
        std::int64_t a23 = rng.small_int(9), a24 = rng.small_int(9), a34 = rng.small_int(9);
        set(0, 1, a12), set(0, 2, a13), set(0, 3, a14);
        set(1, 2, a23), set(1, 3, a24), set(2, 3, a34);
        CHECK(pfaffian(m) == Rational(a12 * a34 - a13 * a24 + a14 * a23));
    }
}

TEST_CASE("pfaffian squared equals determinant") {
    PrimeField k(kDefaultPrime);
    RngStream rng(13);
    for (int n : {2, 4, 6, 8}) {
        for (int trial = 0; trial < 5; ++trial) {
            Mat<PrimeField> m(k, n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto v = k.random(rng);
                    m(i, j) = v;
                    m(j, i) = k.neg(v);
                }
            auto pf = pfaffian(m);
            CHECK(k.eq(k.mul(pf, pf), determinant(m)));
        }
    }
}

TEST_CASE("pfaffian structure errors") {
    PrimeField k(kDefaultPrime);
    Mat<PrimeField> odd(k, 3, 3);
    CHECK_THROWS_AS(pfaffian(odd), StructureError);
    auto not_skew = Mat<PrimeField>::identity(k, 4);
    CHECK_THROWS_AS(pfaffian(not_skew), StructureError);
}

TEST_CASE("rational Bareiss rank agrees with generic elimination") {
    RationalField q;
    RngStream rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.below(4));
        Mat<RationalField> m(q, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Rational(rng.small_int(4));
        auto d = determinant(m);
        CHECK((d == det_cofactor_oracle(m)));
        CHECK((rank_kernel(m).rank == n) == (d != 0));
    }
}

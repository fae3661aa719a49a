#include <doctest.h>

#include "kappa/linalg.hpp"
#include "kappa/rng.hpp"

using namespace kappa;

namespace {

Mat<Rational> qmat(std::initializer_list<std::initializer_list<long>> rows) {
    Mat<Rational> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Mat<Rational>(0, 0)) == 0);
    CHECK(rank(Mat<Rational>(3, 0)) == 0);
    for (Index d : {1, 3, 6}) CHECK(rank(Mat<Rational>(Mat<Rational>::Identity(d, d))) == d);
    CHECK(rank(qmat({{2, 4}, {1, 2}})) == 1);
    CHECK(rank(qmat({{1, 2}, {3, 4}})) == 2);
}

TEST_CASE("kernel of stacked quadrics supported on four of five variables") {
    // three quadrics in y1..y4 inside d = 5: the stacked matrix kills exactly
    // the unused coordinate direction
    Rng rng(7);
    FieldOf<Rational> fq;
    Mat<Rational> stacked(15, 5);
    stacked.setZero();
    for (int i = 0; i < 3; ++i) {
        Mat<Rational> a = Mat<Rational>::Zero(5, 5);
        a.topLeftCorner(4, 4) = random_symmetric(fq, 4, rng, 5);
        stacked.block(5 * i, 0, 5, 5) = a;
    }
    auto kb = kernel_basis(stacked);
    REQUIRE(kb.size() == 1);
    CHECK(is_zero_matrix(stacked * kb[0]));
    CHECK(kb[0](4) != Rational(0));

    // trivial cases
    CHECK(kernel_basis(Mat<Rational>(Mat<Rational>::Identity(3, 3))).empty());
    auto zero_kernel = kernel_basis(Mat<Rational>(Mat<Rational>::Zero(3, 3)));
    CHECK(zero_kernel.size() == 3);
    Mat<Rational> span(3, 3);
    for (Index j = 0; j < 3; ++j) span.col(j) = zero_kernel[static_cast<std::size_t>(j)];
    CHECK(rank(span) == 3);
}

TEST_CASE("determinant") {
    CHECK(determinant(Mat<Rational>(Mat<Rational>::Identity(4, 4))) == Rational(1));
    Mat<Rational> diag = Mat<Rational>::Zero(2, 2);
    diag(0, 0) = Rational(2);
    diag(1, 1) = Rational(3);
    CHECK(determinant(diag) == Rational(6));

    Rng rng(3);
    FieldOf<Rational> fq;
    Mat<Rational> m = random_matrix(fq, 5, 5, rng, 9);
    m.row(3) = m.row(1);  // duplicated row
    CHECK(determinant(m) == Rational(0));

    CHECK_THROWS_AS(determinant(Mat<Rational>(2, 3)), WrongShape);
}

TEST_CASE("rref examples") {
    auto id = Mat<Rational>(Mat<Rational>::Identity(4, 4));
    auto r = rref(id);
    CHECK(r.matrix == id);
    CHECK(r.pivots == std::vector<Index>{0, 1, 2, 3});

    auto r2 = rref(qmat({{2, 4}, {1, 2}}));
    CHECK(r2.matrix == qmat({{1, 2}, {0, 0}}));
    CHECK(r2.pivots == std::vector<Index>{0});

    // stacked psi_0 of a single nonsingular quadric is injective: all columns pivot
    Rng rng(11);
    FieldOf<Rational> fq;
    Mat<Rational> a = random_symmetric(fq, 4, rng, 5);
    while (rank(a) < 4) a = random_symmetric(fq, 4, rng, 5);
    CHECK(rref(a).pivots.size() == 4);
}

TEST_CASE("rank over the dual ring") {
    using D = Dual<Rational>;
    Rng rng(5);
    Mat<D> m(3, 3);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j)
            m(i, j) = D(Rational(i == j ? 1 : 0), Rational(rng.int_in(-4, 4)));
    CHECK(rank(m) == 3);

    Mat<D> eps(1, 1);
    eps(0, 0) = D(Rational(0), Rational(1));
    CHECK_THROWS_AS(rank(eps), PivotNotUnit);

    // a non-unit entry sharing a row with a unit pivot is fine
    Mat<D> mixed = Mat<D>::Zero(2, 2);
    mixed(0, 0) = D(Rational(0), Rational(1));
    mixed(0, 1) = D(Rational(1), Rational(0));
    CHECK(rank(mixed) == 1);
}

TEST_CASE("elimination invariants over both fields") {
    Rng rng(20240521);
    FieldOf<Rational> fq;
    FieldOf<Fp> fp(10007);
    for (int trial = 0; trial < 50; ++trial) {
        Index rows = 1 + static_cast<Index>(rng.below(6));
        Index cols = 1 + static_cast<Index>(rng.below(6));

        Mat<Rational> mq = random_matrix(fq, rows, cols, rng, 9);
        if (trial % 3 == 0 && rows > 1) mq.row(rows - 1) = mq.row(0);  // force some rank drops
        CHECK(rank(mq) == rank(Mat<Rational>(mq.transpose())));
        auto kq = kernel_basis(mq);
        CHECK(static_cast<Index>(kq.size()) == cols - rank(mq));
        for (const auto& v : kq) CHECK(is_zero_matrix(mq * v));
        auto r1 = rref(mq);
        auto r2 = rref(r1.matrix);
        CHECK(r1.matrix == r2.matrix);
        CHECK(r1.pivots == r2.pivots);
        // uniqueness: any invertible row operation leaves the RREF alone
        Mat<Rational> p = random_invertible(fq, rows, rng, 4);
        CHECK(rref(Mat<Rational>(p * mq)).matrix == r1.matrix);

        Mat<Fp> mp = random_matrix(fp, rows, cols, rng);
        if (trial % 3 == 1 && rows > 1) mp.row(rows - 1) = mp.row(0);
        CHECK(rank(mp) == rank(Mat<Fp>(mp.transpose())));
        auto kp = kernel_basis(mp);
        CHECK(static_cast<Index>(kp.size()) == cols - rank(mp));
        for (const auto& v : kp) CHECK(is_zero_matrix(mp * v));

        Mat<Rational> sq = random_matrix(fq, rows, rows, rng, 9);
        CHECK((determinant(sq) != Rational(0)) == (rank(sq) == rows));
        Mat<Fp> sp = random_matrix(fp, rows, rows, rng);
        CHECK(!determinant(sp).is_zero() == (rank(sp) == rows));
    }
}

TEST_CASE("modular rank is a lower bound and usually exact") {
    Rng rng(99);
    FieldOf<Rational> fq;
    int equal = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Index rows = 2 + static_cast<Index>(rng.below(5));
        Index cols = 2 + static_cast<Index>(rng.below(5));
        Mat<Rational> m = random_matrix(fq, rows, cols, rng, 30);
        Index exact = rank(m);
        Index lower = rank_mod_primes(m, static_cast<std::uint64_t>(trial), 3);
        CHECK(lower <= exact);
        if (lower == exact) ++equal;
        CHECK(rank_certified(m, static_cast<std::uint64_t>(trial)) == exact);
    }
    CHECK(equal >= 28);  // random matrices almost never lose rank mod a large prime

    // fixed fixture where reduction genuinely drops the rank
    Mat<Rational> fix(1, 1);
    fix(0, 0) = Rational(10007);
    CHECK(rank(fix) == 1);
    CHECK(detail::rank_gauss(mat_from_rational(fix, FieldOf<Fp>(10007))) == 0);
}

TEST_CASE("solve_columns and basis completion") {
    Rng rng(1234);
    FieldOf<Rational> fq;
    Mat<Rational> a = random_invertible(fq, 4, rng, 6);
    Mat<Rational> b = random_matrix(fq, 4, 2, rng, 6);
    Mat<Rational> x = solve_columns(a, b);
    CHECK(Mat<Rational>(a * x) == b);

    Mat<Rational> sing = a;
    sing.col(2) = sing.col(1);
    CHECK_THROWS_AS(solve_columns(sing, b), SingularTransform);

    std::vector<Vec<Rational>> vs;
    Vec<Rational> v(4);
    v << Rational(1), Rational(2), Rational(3), Rational(4);
    vs.push_back(v);
    Mat<Rational> g = complete_to_basis(vs, 4);
    CHECK(rank(g) == 4);
    CHECK(g.col(3) == v);
}

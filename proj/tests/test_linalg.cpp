#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ainf/matrix.hpp"

using namespace ainf;

namespace {

Scalar qi(long v) { return Scalar::from_int(v, Field::Q()); }

Matrix from_ints(const std::vector<std::vector<long>>& rows, const Field& f)
{
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c, f);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m.at(i, j) = Scalar::from_int(rows[i][j], f);
    return m;
}

/* Independent elimination oracle: forward elimination + back substitution,
 * no transform bookkeeping. Returns (echelon, pivots). */
std::pair<Matrix, std::vector<size_t>> plain_gauss(Matrix m)
{
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        for (size_t j = 0; j < m.cols(); ++j)
            std::swap(m.at(row, j), m.at(pr, j));
        Scalar inv = m.at(row, col).inverse();
        for (size_t j = 0; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero())
                continue;
            Scalar f = m.at(i, col);
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

}  // namespace

TEST_CASE("scalar arithmetic and canonical formatting")
{
    Field Q = Field::Q();
    Scalar a = Scalar::parse("2/4", Q);
    CHECK(a.str() == "1/2");
    CHECK((a + a).str() == "1/1");
    CHECK((a - a).is_zero());
    CHECK((-a).str() == "-1/2");
    CHECK((a / a).is_one());
    CHECK(Scalar::parse("-3/-6", Q).str() == "1/2");

    Field F5 = Field::Zp(5);
    Scalar b = Scalar::parse("7", F5);
    CHECK(b.str() == "2");
    CHECK((b * b).str() == "4");
    CHECK(b.inverse().str() == "3");
    CHECK((b * b.inverse()).is_one());
    CHECK_THROWS_AS((void)Field::Zp(6), Error);
    CHECK_THROWS_AS((void)(a + b), Error);
}

TEST_CASE("rref: identity and zero cases")
{
    Field Q = Field::Q();
    Matrix id3 = Matrix::identity(3, Q);
    RrefResult r = rref(id3);
    CHECK(r.echelon == id3);
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
    CHECK(r.transform * id3 == r.echelon);

    Matrix z(1, 1, Q);
    RrefResult rz = rref(z);
    CHECK(rz.echelon == z);
    CHECK(rz.pivots.empty());
}

TEST_CASE("rref over Z/5 agrees with an independent elimination")
{
    Field F5 = Field::Zp(5);
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m(4, 4, F5);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                m.at(i, j) = Scalar::from_int(static_cast<long>(rng() % 5), F5);
        RrefResult r = rref(m);
        auto [oracle, opiv] = plain_gauss(m);
        CHECK(r.echelon == oracle);
        CHECK(r.pivots == opiv);
        CHECK(r.transform * m == r.echelon);
    }
}

TEST_CASE("kernel basis: canonical forms")
{
    Field Q = Field::Q();
    CHECK(kernel_basis(Matrix::identity(4, Q)).empty());

    Matrix z2(2, 2, Q);
    auto kz = kernel_basis(z2);
    REQUIRE(kz.size() == 2);
    CHECK(kz[0][0].is_one());
    CHECK(kz[0][1].is_zero());
    CHECK(kz[1][0].is_zero());
    CHECK(kz[1][1].is_one());

    Matrix row = from_ints({{1, 1}}, Q);
    auto kr = kernel_basis(row);
    REQUIRE(kr.size() == 1);
    CHECK(kr[0][0] == qi(-1));
    CHECK(kr[0][1] == qi(1));
}

TEST_CASE("rank-nullity over random matrices")
{
    Field F7 = Field::Zp(7);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        Matrix m(rows, cols, F7);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = Scalar::from_int(static_cast<long>(rng() % 7), F7);
        RrefResult r = rref(m);
        auto k = kernel_basis(m);
        CHECK(r.pivots.size() + k.size() == cols);
        for (const auto& v : k)
            CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("solve_particular: canonical solutions and failure indicator")
{
    Field Q = Field::Q();
    Matrix id = Matrix::identity(3, Q);
    Vec b = {qi(2), qi(-1), qi(5)};
    auto x = solve_particular(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix z(2, 2, Q);
    CHECK(!solve_particular(z, Vec{qi(1), qi(0)}).has_value());

    Matrix m = from_ints({{1, 2}, {2, 4}}, Q);
    auto s = solve_particular(m, Vec{qi(1), qi(2)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == qi(1));
    CHECK((*s)[1] == qi(0));
    CHECK(vec_is_zero(vec_add(m.apply(*s), vec_scale(qi(-1), Vec{qi(1), qi(2)}))));

    /* inconsistent system: appending b strictly increases rank */
    auto none = solve_particular(m, Vec{qi(1), qi(3)});
    CHECK(!none.has_value());
    Matrix aug(2, 3, Q);
    aug.at(0, 0) = qi(1);
    aug.at(0, 1) = qi(2);
    aug.at(0, 2) = qi(1);
    aug.at(1, 0) = qi(2);
    aug.at(1, 1) = qi(4);
    aug.at(1, 2) = qi(3);
    CHECK(rref(aug).pivots.size() == rref(m).pivots.size() + 1);
}

TEST_CASE("determinism: identical inputs give identical outputs")
{
    Field F5 = Field::Zp(5);
    std::mt19937 rng(99);
    Matrix m(5, 6, F5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 6; ++j)
            m.at(i, j) = Scalar::from_int(static_cast<long>(rng() % 5), F5);
    RrefResult a = rref(m), b = rref(m);
    CHECK(a.echelon == b.echelon);
    CHECK(a.transform == b.transform);
    CHECK(a.pivots == b.pivots);
}

TEST_CASE("rref transform is invertible")
{
    Field F7 = Field::Zp(7);
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(4, 5, F7);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 5; ++j)
                m.at(i, j) = Scalar::from_int(static_cast<long>(rng() % 7), F7);
        RrefResult r = rref(m);
        CHECK(rref(r.transform).pivots.size() == 4);
        CHECK(r.transform * m == r.echelon);
    }
}

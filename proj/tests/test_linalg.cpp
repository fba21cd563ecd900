#include "doctest.h"

#include <random>

#include "e510/linalg.hpp"

using namespace e510;

namespace {

int dense_rank(std::vector<std::vector<mpq_class>> a) {
    int r = 0;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("kernel examples") {
    SparseRationalMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.add(i, i, 1);
    CHECK(kernel(id).empty());

    SparseRationalMatrix z(2, 3);
    auto kz = kernel(z);
    CHECK(kz.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(kz[i] == SparseVector{{static_cast<int>(i), Rational(1)}});

    SparseRationalMatrix m(2, 3);
    m.add(0, 0, 1);
    m.add(0, 1, 2);
    m.add(0, 2, 3);
    m.add(1, 0, 2);
    m.add(1, 1, 4);
    m.add(1, 2, 6);
    auto k = kernel(m);
    CHECK(k.size() == 2);
    CHECK(rank(m) == 1);
    // reduced echelon: leading coordinates in columns 0 and 1? kernel of x+2y+3z=0 is
    // spanned by (1,0,-1/3) and (0,1,-2/3)
    CHECK(k[0] == SparseVector{{0, Rational(1)}, {2, Rational(-1, 3)}});
    CHECK(k[1] == SparseVector{{1, Rational(1)}, {2, Rational(-2, 3)}});
}

TEST_CASE("random sparse matrices: kernel annihilated, rank-nullity, rank oracle") {
    std::mt19937 rng(99);
    for (int it = 0; it < 200; ++it) {
        int rows = 1 + static_cast<int>(rng() % 12), cols = 1 + static_cast<int>(rng() % 12);
        SparseRationalMatrix m(rows, cols);
        std::vector<std::vector<mpq_class>> dense(rows, std::vector<mpq_class>(cols));
        int fill = static_cast<int>(rng() % 40);
        for (int k = 0; k < fill; ++k) {
            int r = static_cast<int>(rng() % rows), c = static_cast<int>(rng() % cols);
            int v = static_cast<int>(rng() % 7) - 3;
            m.add(r, c, v);
            dense[r][c] += v;
        }
        // add a dependent row sometimes
        auto ker = kernel(m);
        int rk = dense_rank(dense);
        CHECK(rk + static_cast<int>(ker.size()) == cols);
        for (const auto& v : ker) {
            for (int r = 0; r < rows; ++r) {
                Rational s;
                for (const auto& [c, x] : m.row(r))
                    for (const auto& [c2, y] : v)
                        if (c == c2) s += x * y;
                CHECK(s.is_zero());
            }
        }
        // echelon normalization
        for (std::size_t i = 0; i < ker.size(); ++i) {
            CHECK(ker[i].front().second.is_one());
            for (std::size_t j = 0; j < ker.size(); ++j)
                if (i != j)
                    for (const auto& [c, x] : ker[j]) CHECK(c != ker[i].front().first);
        }
    }
}

TEST_CASE("solve_square") {
    std::vector<std::vector<Rational>> a = {{2, 1}, {1, 3}};
    auto x = solve_square(a, {3, 5});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(4, 5));
    CHECK((*x)[1] == Rational(7, 5));
    CHECK_FALSE(solve_square({{1, 2}, {2, 4}}, {1, 1}).has_value());
}

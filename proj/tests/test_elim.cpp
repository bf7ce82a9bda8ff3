#include <doctest.h>

#include "ordlift/elim.hpp"

#include <random>

using namespace ordlift;

namespace {
std::vector<std::vector<long>> random_matrix(const Field& F, long rows, long cols,
                                             std::mt19937_64& rng) {
    std::vector<std::vector<long>> M(rows, std::vector<long>(cols));
    for (auto& r : M)
        for (auto& x : r) x = (long)(rng() % F.q());
    return M;
}
} // namespace

TEST_CASE("serial and parallel elimination are bit-identical") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {2, 4}, {3, 2}}) {
        Field F(p, f);
        std::mt19937_64 rng(123);
        for (int t = 0; t < 5; ++t) {
            auto M = random_matrix(F, 120, 90, rng);
            Echelon a = echelonize(F, M, ElimMode::Serial);
            Echelon b = echelonize(F, M, ElimMode::Parallel);
            CHECK(a.rows == b.rows);
            CHECK(a.pivot_cols == b.pivot_cols);
        }
    }
}

TEST_CASE("echelon properties") {
    Field F(2, 2);
    std::mt19937_64 rng(5);
    auto M = random_matrix(F, 40, 25, rng);
    Echelon E = echelonize(F, M);
    CHECK(E.rank() <= 25);
    // pivot entries are 1, pivot columns cleared elsewhere
    for (size_t i = 0; i < E.rows.size(); ++i) {
        CHECK(E.rows[i][E.pivot_cols[i]] == 1);
        for (size_t j = 0; j < E.rows.size(); ++j)
            if (i != j) CHECK(E.rows[j][E.pivot_cols[i]] == 0);
    }
    // every original row reduces to zero against the echelon
    for (auto row : M) {
        reduce_row(F, E, row);
        for (long x : row) CHECK(x == 0);
    }
}

TEST_CASE("kernel basis") {
    Field F(3, 1);
    // x + 2y = 0 over F_3: kernel of (1 2) is spanned by (1, 1)
    std::vector<std::vector<long>> M = {{1, 2}};
    auto K = kernel_basis(F, M, 2);
    REQUIRE(K.size() == 1);
    // check the kernel vector satisfies the equation
    long s = F.add(F.mul(1, K[0][0]), F.mul(2, K[0][1]));
    CHECK(s == 0);
    // random matrices: rank + nullity = cols
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        auto R = random_matrix(F, 12, 20, rng);
        long rk = rank_of(F, R);
        auto kb = kernel_basis(F, R, 20);
        CHECK(rk + (long)kb.size() == 20);
        for (const auto& v : kb)
            for (const auto& row : R) {
                long acc = 0;
                for (long j = 0; j < 20; ++j) acc = F.add(acc, F.mul(row[j], v[j]));
                CHECK(acc == 0);
            }
    }
}

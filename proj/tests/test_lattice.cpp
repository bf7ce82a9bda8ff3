#include <doctest.h>

#include "ordlift/lattice.hpp"

#include <random>

using namespace ordlift;

namespace {

Lattice mk(long p, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rat>> rr;
    for (auto& r : rows) rr.push_back(std::vector<Rat>(r.begin(), r.end()));
    return hnf(p, (long)rows[0].size(), std::move(rr));
}

// random unimodular-over-Z_(p) transform: product of elementary row ops
std::vector<std::vector<Rat>> random_unimodular_transform(long p, const Lattice& L,
                                                          std::mt19937_64& rng) {
    auto rows = L.rows;
    long D = L.D;
    for (int step = 0; step < 12; ++step) {
        long i = (long)(rng() % D), j = (long)(rng() % D);
        if (i == j) continue;
        long c = (long)(rng() % 7) - 3;
        for (long t = 0; t < D; ++t) rows[i][t] += Rat(c) * rows[j][t];
    }
    // scale a row by a p-adic unit (1 + p k)/(1 + p k')
    long i = (long)(rng() % D);
    Rat unit = Rat(1 + p * (long)(rng() % 5)) / Rat(1 + p * (long)(rng() % 5));
    for (long t = 0; t < D; ++t) rows[i][t] *= unit;
    return rows;
}

Ambient two_lines(long p) {
    Ambient A;
    A.p = p;
    A.blocks = {{1, false, 0}, {1, false, 0}};
    return A;
}

} // namespace

TEST_CASE("hnf canonical examples") {
    // already canonical
    Lattice L1 = mk(2, {{1, 1}, {0, 2}});
    CHECK(L1.rows[0] == std::vector<Rat>{1, 1});
    CHECK(L1.rows[1] == std::vector<Rat>{0, 2});

    // {[1,1],[1,3]} reduces to {[1,1],[0,2]}
    Lattice L2 = mk(2, {{1, 1}, {1, 3}});
    CHECK(L2 == L1);

    // {[2,0],[0,2]} scaled by 1/2 is the identity
    Lattice L3 = lat_scale(mk(2, {{2, 0}, {0, 2}}), Rat(1) / 2);
    CHECK(L3 == mk(2, {{1, 0}, {0, 1}}));

    // idempotent
    Lattice L4 = hnf(2, 2, L2.rows);
    CHECK(L4 == L2);

    CHECK_THROWS(mk(2, {{1, 1}, {2, 2}}));
}

TEST_CASE("hnf canonicality under random unimodular transforms") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        long p = (t % 2) ? 2 : 3;
        long D = 2 + (long)(rng() % 3);
        std::vector<std::vector<Rat>> rows(D, std::vector<Rat>(D, 0));
        for (long i = 0; i < D; ++i)
            for (long j = 0; j < D; ++j)
                rows[i][j] = Rat((long)(rng() % 19) - 9) / Rat(1 + 2 * (long)(rng() % 3));
        Lattice L;
        try {
            L = hnf(p, D, rows);
        } catch (const std::domain_error&) {
            continue; // rank-deficient sample
        }
        auto other = random_unimodular_transform(p, L, rng);
        CHECK(hnf(p, D, other) == L);
    }
}

TEST_CASE("trace form") {
    // A = K + K, u = (1/2, 1/2), a = b = [1,1] -> T_u(ab) = 1
    Ambient A = two_lines(2);
    SymmElem u;
    u.u = {{Rat(1) / 2, 0}, {Rat(1) / 2, 0}};
    AlgElem one = alg_one(A);
    CHECK(trace_form(A, u, one, one) == 1);
    AlgElem zero(A);
    CHECK(trace_form(A, u, zero, one) == 0);

    // quad block over p=3: T_u(pi, 1) = 0
    Ambient Q;
    Q.p = 3;
    Q.blocks = {{1, true, -1}};
    SymmElem uq;
    uq.u = {{Rat(1) / 3, 0}};
    AlgElem pi(Q);
    pi.v[1] = 1;
    CHECK(trace_form(Q, uq, pi, alg_one(Q)) == 0);
}

TEST_CASE("trace form is symmetric and associative") {
    std::mt19937_64 rng(41);
    Ambient A;
    A.p = 2;
    A.blocks = {{1, false, 0}, {2, false, 0}};
    SymmElem u;
    u.u = {{Rat(3) / 4, 0}, {Rat(1) / 4, 0}};
    auto rnd_elem = [&]() {
        AlgElem x(A);
        for (auto& v : x.v) v = Rat((long)(rng() % 13) - 6) / Rat(1 + (long)(rng() % 4));
        return x;
    };
    for (int t = 0; t < 1000; ++t) {
        AlgElem a = rnd_elem(), b = rnd_elem(), c = rnd_elem();
        CHECK(trace_form(A, u, a, b) == trace_form(A, u, b, a));
        CHECK(trace_form(A, u, alg_mul(a, b), c) == trace_form(A, u, a, alg_mul(b, c)));
    }
    // and on a quad-center ambient
    Ambient Q;
    Q.p = 3;
    Q.blocks = {{2, true, -1}};
    SymmElem uq;
    uq.u = {{Rat(1) / 9, Rat(2) / 3}};
    auto rnd_q = [&]() {
        AlgElem x(Q);
        for (auto& v : x.v) v = Rat((long)(rng() % 13) - 6) / Rat(1 + (long)(rng() % 4));
        return x;
    };
    for (int t = 0; t < 1000; ++t) {
        AlgElem a = rnd_q(), b = rnd_q(), c = rnd_q();
        CHECK(trace_form(Q, uq, a, b) == trace_form(Q, uq, b, a));
        CHECK(trace_form(Q, uq, alg_mul(a, b), c) == trace_form(Q, uq, a, alg_mul(b, c)));
    }
}

TEST_CASE("dual lattice examples") {
    // standard lattice with all-one u on a commutative ambient is self-dual
    Ambient A = two_lines(2);
    SymmElem u1;
    u1.u = {{1, 0}, {1, 0}};
    std::vector<std::vector<Rat>> F = {{1, 0}, {0, 1}};
    Lattice O2 = mk(2, {{1, 0}, {0, 1}});
    CHECK(lat_dual_pairing(2, F, O2) == O2);

    // L = <[1,1],[0,4]> in K+K, u = (1/12, 1/4): self-dual
    // (Gram determinant 16 u1 u2 = 1/3, a 2-adic unit)
    SymmElem u;
    u.u = {{Rat(1) / 12, 0}, {Rat(1) / 4, 0}};
    std::vector<std::vector<Rat>> Fu = {{Rat(1) / 12, 0}, {0, Rat(1) / 4}};
    Lattice L = mk(2, {{1, 1}, {0, 4}});
    Lattice Ld = lat_dual_pairing(2, Fu, L);
    CHECK(Ld == L);

    // scaling law: dual(2L) = (1/2) dual(L)
    CHECK(lat_dual_pairing(2, Fu, lat_scale(L, 2)) == lat_scale(Ld, Rat(1) / 2));
}

TEST_CASE("dual is an involution on random lattices") {
    std::mt19937_64 rng(53);
    long checked = 0;
    while (checked < 100) {
        long p = (checked % 2) ? 2 : 3;
        long D = 2 + (long)(rng() % 3);
        std::vector<std::vector<Rat>> rows(D, std::vector<Rat>(D, 0));
        for (long i = 0; i < D; ++i)
            for (long j = 0; j < D; ++j) rows[i][j] = Rat((long)(rng() % 9) - 4);
        Lattice L;
        try {
            L = hnf(p, D, rows);
        } catch (const std::domain_error&) {
            continue;
        }
        // random admissible diagonal pairing: unit times p-power per coordinate
        std::vector<std::vector<Rat>> F(D, std::vector<Rat>(D, 0));
        for (long i = 0; i < D; ++i)
            F[i][i] = p_pow(p, (long)(rng() % 5) - 2) * Rat(2 * (long)(rng() % 4) + 1);
        Lattice Ld = lat_dual_pairing(p, F, L);
        CHECK(lat_dual_pairing(p, F, Ld) == L);
        ++checked;
    }
}

TEST_CASE("idx") {
    Lattice O1 = mk(2, {{1}});
    Lattice L8 = mk(2, {{8}});
    CHECK(idx(O1, L8) == 3);

    Lattice L = mk(3, {{1, 1}, {0, 3}});
    CHECK(idx(L, lat_scale(L, 3)) == 1);

    Lattice L1 = mk(3, {{1, 1}, {0, 3}});
    Lattice L2 = mk(3, {{3, 3}, {0, 3}});
    CHECK(idx(L1, L2) == Rat(1) / 2);

    // additivity over random chains
    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) {
        long p = 3, D = 3;
        auto rand_lat = [&]() {
            std::vector<std::vector<Rat>> rows(D, std::vector<Rat>(D, 0));
            for (long i = 0; i < D; ++i)
                for (long j = 0; j < D; ++j) rows[i][j] = Rat((long)(rng() % 9) - 4);
            return rows;
        };
        Lattice A1, A2, A3;
        try {
            A1 = hnf(p, D, rand_lat());
            A2 = hnf(p, D, rand_lat());
            A3 = hnf(p, D, rand_lat());
        } catch (const std::domain_error&) {
            continue;
        }
        CHECK(idx(A1, A3) == idx(A1, A2) + idx(A2, A3));
    }
}

TEST_CASE("lattice sums, intersections, membership") {
    Lattice a = mk(2, {{2, 0}, {0, 1}});
    Lattice b = mk(2, {{1, 0}, {0, 2}});
    CHECK(lat_sum(a, b) == mk(2, {{1, 0}, {0, 1}}));
    CHECK(lat_intersect(a, b) == mk(2, {{2, 0}, {0, 2}}));
    CHECK(lat_contains(a, {Rat(4), Rat(3)}));
    CHECK(!lat_contains(a, {Rat(1), Rat(0)}));
    CHECK(lat_contains(a, {Rat(1) * 2, Rat(-5)}));
}

namespace {
// the Z_2 C_2 model {(a,b) : a = b mod 2} as a one-idempotent block order
BlockOrder z2c2_model() {
    BlockOrder O;
    O.amb.p = 2;
    O.amb.blocks = {{1, false, 0}, {1, false, 0}};
    O.kappa = 1;
    O.idem = {{{0, 0}, {1, 0}}};
    O.pieces[{0, 0}] = mk(2, {{1, 1}, {0, 2}});
    return O;
}
} // namespace

TEST_CASE("is_order") {
    // maximal order: all pieces standard
    BlockOrder M = z2c2_model();
    M.pieces[{0, 0}] = mk(2, {{1, 0}, {0, 1}});
    CHECK(is_order(M).pass());

    // the (2,1) standard lift
    BlockOrder O = z2c2_model();
    CHECK(is_order(O).pass());

    // a piece scaled by 1/p breaks closure
    BlockOrder bad = z2c2_model();
    bad.pieces[{0, 0}] = lat_scale(bad.pieces[{0, 0}], Rat(1) / 2);
    CHECK(!is_order(bad).pass());
}

TEST_CASE("is_selfdual") {
    BlockOrder O = z2c2_model();
    SymmElem u;
    u.u = {{Rat(1) / 2, 0}, {Rat(1) / 2, 0}};
    CHECK(is_selfdual(O, u).pass());

    SymmElem u1;
    u1.u = {{1, 0}, {1, 0}};
    CHECK(!is_selfdual(O, u1).pass());

    BlockOrder M = z2c2_model();
    M.pieces[{0, 0}] = mk(2, {{1, 0}, {0, 1}});
    CHECK(!is_selfdual(M, u).pass());
}

TEST_CASE("decomposition matrix of the maximal order") {
    // diag(O, O) with two idempotents: identity matrix
    BlockOrder M;
    M.amb.p = 2;
    M.amb.blocks = {{1, false, 0}, {1, false, 0}};
    M.kappa = 2;
    M.idem = {{{0, 0}}, {{1, 0}}};
    M.pieces[{0, 0}] = mk(2, {{1}});
    M.pieces[{1, 1}] = mk(2, {{1}});
    auto D = decomposition_matrix(M);
    CHECK(D.entries == std::vector<std::vector<long>>{{1, 0}, {0, 1}});
}

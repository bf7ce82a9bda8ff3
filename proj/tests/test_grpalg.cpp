#include <doctest.h>

#include "ordlift/grpalg.hpp"

#include <algorithm>

using namespace ordlift;

TEST_CASE("delta group structure") {
    DeltaGroup G(2, 2);
    CHECK(G.order() == 12);
    // group axioms on all pairs/triples for the small group
    long e = G.identity();
    for (long g = 0; g < G.order(); ++g) {
        CHECK(G.mul(g, e) == g);
        CHECK(G.mul(e, g) == g);
        CHECK(G.mul(g, G.inv(g)) == e);
    }
    for (long g = 0; g < G.order(); ++g)
        for (long h = 0; h < G.order(); ++h)
            for (long k = 0; k < G.order(); ++k)
                CHECK(G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)));
}

TEST_CASE("character idempotents") {
    // (2,1): A trivial, the single idempotent is the identity element
    DeltaGroup G21(2, 1);
    auto es21 = char_idempotents(G21);
    REQUIRE(es21.size() == 1);
    CHECK(ga_eq(es21[0], ga_one(G21)));

    for (auto [p, f] : {std::pair<long, long>{2, 2}, {3, 1}, {3, 2}, {2, 3}, {2, 4}, {5, 1}}) {
        DeltaGroup G(p, f);
        auto es = char_idempotents(G);
        REQUIRE((long)es.size() == G.q() - 1);
        GroupAlgElem sum(G);
        for (size_t i = 0; i < es.size(); ++i) {
            sum = ga_add(sum, es[i]);
            CHECK(ga_eq(ga_mul(es[i], es[i]), es[i]));
            for (size_t j = i + 1; j < es.size(); ++j)
                CHECK(ga_mul(es[i], es[j]).is_zero());
        }
        CHECK(ga_eq(sum, ga_one(G)));
    }
}

TEST_CASE("radical eigenbasis") {
    // (2,1): the single eigenvector is x - 1 (= x + 1 in char 2), weight 0
    DeltaGroup G21(2, 1);
    auto rad21 = radical_eigenbasis(G21);
    REQUIRE(rad21.size() == 1);
    CHECK(rad21[0].weight == 0);
    CHECK(rad21[0].marked);
    GroupAlgElem expect(G21);
    expect.c[G21.id_of(1, 0)] = 1;
    expect.c[G21.id_of(1, 1)] = 1;
    CHECK(ga_eq(rad21[0].v, expect));

    // (2,2): 3 eigenvectors; marked weights {2,1} in Z/3
    DeltaGroup G22(2, 2);
    auto rad22 = radical_eigenbasis(G22);
    REQUIRE(rad22.size() == 3);
    std::vector<long> marked;
    for (const auto& rv : rad22) {
        if (rv.marked) marked.push_back(rv.weight);
        // eigenvector property under conjugation by each a in A
        const Field& F = G22.field();
        for (long k = 0; k < G22.q() - 1; ++k) {
            long a = F.exp(k);
            long u = G22.id_of(a, 0);
            GroupAlgElem conj(G22);
            for (long g = 0; g < G22.order(); ++g)
                if (rv.v.c[g] != 0) conj.c[G22.mul(G22.mul(u, g), G22.inv(u))] = rv.v.c[g];
            CHECK(ga_eq(conj, ga_scale(rv.v, F.pow(a, rv.weight))));
        }
    }
    std::sort(marked.begin(), marked.end());
    CHECK(marked == std::vector<long>{1, 2});

    // (3,1): weight of the marked generator is {0} in Z/2
    DeltaGroup G31(3, 1);
    auto rad31 = radical_eigenbasis(G31);
    REQUIRE(rad31.size() == 2);
    for (const auto& rv : rad31)
        if (rv.marked) CHECK(rv.weight == 0);
}

TEST_CASE("x_set examples") {
    auto check = [](long p, long f, std::vector<long> expect) {
        DeltaGroup G(p, f);
        XSet x = x_set(G);
        std::sort(expect.begin(), expect.end());
        CHECK(x.residues == expect);
    };
    check(2, 2, {2, 1});
    check(2, 3, {2, 4, 1});
    check(3, 1, {0});
}

TEST_CASE("cartan from group") {
    DeltaGroup G22(2, 2);
    auto C = cartan_from_group(G22);
    std::vector<std::vector<long>> IJ = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    CHECK(C == IJ);

    DeltaGroup G31(3, 1);
    auto C31 = cartan_from_group(G31);
    std::vector<std::vector<long>> D31 = {{3, 0}, {0, 3}};
    CHECK(C31 == D31);

    DeltaGroup G21(2, 1);
    CHECK(cartan_from_group(G21) == std::vector<std::vector<long>>{{2}});
}

TEST_CASE("class counts") {
    CHECK(class_count(DeltaGroup(2, 2)) == 4);
    CHECK(class_count(DeltaGroup(3, 1)) == 6);
    CHECK(class_count(DeltaGroup(5, 1)) == 8);
}

TEST_CASE("group-quiver isomorphism") {
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        DeltaGroup G(p, f);
        Presentation P = delta_presentation(p, f);
        Report rep = verify_group_quiver_iso(G, P);
        INFO(rep.to_json().dump());
        CHECK(rep.pass());
    }
}

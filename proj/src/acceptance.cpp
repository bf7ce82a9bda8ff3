#include "ordlift/acceptance.hpp"

#include "ordlift/grpalg.hpp"
#include "ordlift/lift.hpp"
#include "ordlift/nebe.hpp"
#include "ordlift/quiver.hpp"

#include <fstream>
#include <random>

namespace ordlift {

namespace {

const std::vector<std::pair<long, long>> kSeven = {{2, 1}, {2, 2}, {2, 3}, {2, 4},
                                                   {3, 1}, {3, 2}, {5, 1}};

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<std::vector<long>> expected_cartan(long p, long f) {
    long n = ipow(p, f) - 1;
    std::vector<std::vector<long>> C(n, std::vector<long>(n, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (p == 2) C[i][j] = (i == j) ? 2 : 1;
            else if ((i - j) % 2 == 0) C[i][j] = (i == j) ? 3 : 2;
        }
    return C;
}

DecompFixture load_fixture(const std::string& dir, const std::string& name) {
    std::ifstream in(dir + "/" + name);
    if (!in.good()) throw std::runtime_error("cannot open fixture " + dir + "/" + name);
    nlohmann::json j;
    in >> j;
    return DecompFixture::from_json(j);
}

void criterion_1(Report& rep) {
    Stopwatch sw;
    bool all = true;
    for (auto [p, f] : kSeven) {
        DeltaGroup G(p, f);
        auto Cg = cartan_from_group(G);
        GradedAlgebra A(delta_presentation(p, f));
        auto Cq = A.cartan();
        bool ok = Cg == Cq && Cq == expected_cartan(p, f);
        long n = ipow(p, f) - 1;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n && ok; ++j) ok = Cq[i][j] == digit_cartan(p, f, i, j);
        if (!ok) {
            all = false;
            rep.add("1.cartan." + std::to_string(p) + "." + std::to_string(f), false);
        }
    }
    rep.add("1.cartan_matrices", all, {{"cases", kSeven.size()}}, sw.ms());
}

void criterion_2(Report& rep, const std::string& fixtures) {
    Stopwatch sw;
    bool all = true;
    for (auto [p, f] : kSeven) {
        GradedAlgebra A(delta_presentation(p, f));
        long q = ipow(p, f);
        if (A.total_dim() != (q - 1) * q) all = false;
    }
    rep.add("2.delta_dimensions", all, nullptr, sw.ms());

    Stopwatch sw2;
    GradedAlgebra K2(koshita_presentation(2));
    rep.add("2.koshita_f2_dim_19", K2.total_dim() == 19, {{"dim", K2.total_dim()}}, sw2.ms());

    Stopwatch sw3;
    DecompFixture fx8 = load_fixture(fixtures, "sl2_8.json");
    long expect = 0;
    for (size_t i = 0; i < fx8.columns.size(); ++i)
        for (size_t j = 0; j < fx8.columns.size(); ++j) {
            long e = 0;
            for (const auto& row : fx8.rows) e += row[i] * row[j];
            expect += e;
        }
    GradedAlgebra K3(koshita_presentation(3));
    rep.add("2.koshita_f3_dim_vs_fixture", K3.total_dim() == expect,
            {{"dim", K3.total_dim()}, {"sum_DtD", expect}}, sw3.ms());
}

void criterion_3(Report& rep) {
    Stopwatch sw;
    bool all = true;
    for (auto [p, f] : kSeven) {
        DeltaGroup G(p, f);
        XSet x = x_set(G);
        long m = G.q() - 1;
        std::vector<long> expect;
        long pq = 1;
        for (long q = 0; q < f; ++q) {
            expect.push_back(m == 1 ? 0 : (2 * pq) % m);
            pq = m == 1 ? pq : (pq * p) % m;
        }
        std::sort(expect.begin(), expect.end());
        if (x.residues != expect) {
            all = false;
            rep.add("3.xset." + std::to_string(p) + "." + std::to_string(f), false);
        }
    }
    rep.add("3.x_set", all, nullptr, sw.ms());
}

void criterion_4(Report& rep) {
    Stopwatch sw;
    bool all = true;
    for (auto [p, f] : kSeven) {
        DeltaGroup G(p, f);
        long classes = class_count(G);
        long expect_total = p == 2 ? ipow(2, f) : ipow(p, f) + 3;
        GradedAlgebra A(delta_presentation(p, f));
        long zdim = 0;
        if (p == 2) {
            zdim = A.center_dim(-1);
        } else {
            long z0 = A.center_dim(0), z1 = A.center_dim(1);
            if (z0 != z1 || 2 * z0 != expect_total) all = false;
            zdim = z0 + z1;
        }
        if (classes != expect_total || zdim != expect_total) {
            all = false;
            rep.add("4.center." + std::to_string(p) + "." + std::to_string(f), false);
        }
    }
    rep.add("4.center_dimensions", all, nullptr, sw.ms());
}

void criterion_5(Report& rep) {
    Stopwatch sw;
    bool all = true;
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        LiftParams P = default_lift_params(p, f);
        BlockOrder O = standard_lift(P);
        Report vr = verify_lift(O, P);
        if (!vr.pass()) {
            all = false;
            rep.merge(vr, "5.fail." + std::to_string(p) + "." + std::to_string(f));
        }
    }
    rep.add("5.standard_lifts_verified", all, nullptr, sw.ms());
}

void criterion_6(Report& rep) {
    Stopwatch sw;
    BlockOrder L21 = standard_lift(default_lift_params(2, 1));
    BlockOrder G21 = group_ring_block_z2c2();
    bool a = L21.pieces.at({0, 0}) == G21.pieces.at({0, 0});
    BlockOrder L31 = standard_lift(default_lift_params(3, 1));
    BlockOrder G31 = group_ring_block_z3c6();
    bool b = L31.pieces.at({0, 0}) == G31.pieces.at({0, 0});
    rep.add("6.ground_truth_anchors", a && b, {{"z2c2", a}, {"z3c6", b}}, sw.ms());
}

bool same_pieces(const BlockOrder& a, const BlockOrder& b) {
    if (a.pieces.size() != b.pieces.size()) return false;
    for (const auto& [ij, L] : a.pieces) {
        auto it = b.pieces.find(ij);
        if (it == b.pieces.end() || !(it->second == L)) return false;
    }
    return true;
}

KtScalar random_unit(const LiftParams& P, std::mt19937_64& rng) {
    auto unit = [&]() {
        return Rat(1 + P.p * (long)(rng() % 7)) / Rat(1 + P.p * (long)(rng() % 7));
    };
    long e = (long)(rng() % 5) - 2;
    switch (P.variant) {
    case LiftVariant::Char2: return KtScalar{unit() * p_pow(P.p, e), 0};
    case LiftVariant::Split:
        return KtScalar{unit() * p_pow(P.p, e), unit() * p_pow(P.p, (long)(rng() % 5) - 2)};
    case LiftVariant::Nonsplit:
        return KtScalar{unit() * p_pow(P.p, e), Rat((long)(rng() % 5) - 2) * p_pow(P.p, e)};
    }
    return {};
}

void criterion_7(Report& rep, unsigned long seed) {
    Stopwatch sw;
    bool all = true;
    std::mt19937_64 rng(seed);
    for (auto [p, f] : {std::pair<long, long>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        LiftParams P = default_lift_params(p, f);
        BlockOrder O = standard_lift(P);
        long k = P.kappa();
        long trials = k < 2 ? 1 : 100;
        for (long t = 0; t < trials; ++t) {
            std::vector<KtScalar> y;
            for (long l = 0; l < k; ++l) y.push_back(random_unit(P, rng));
            BlockOrder conj = O;
            for (auto& [ij, L] : conj.pieces) {
                auto [i, j] = ij;
                if (i == j) continue;
                L = kt_scale_lattice(P, L, kt_mul(P, kt_inv(P, y[i]), y[j]));
            }
            if (!same_pieces(normalize_order(conj, P), O)) {
                all = false;
                break;
            }
        }
        // u-independence inside the addendum equivalence class
        LiftParams P2 = P;
        for (long l = 0; l < (long)P2.u.u.size(); ++l)
            P2.u.u[l].first *= Rat(1 + ipow(p, f) * (long)(1 + rng() % 5));
        if (P.variant == LiftVariant::Split) {
            // keep c = u_{k+1}/u_{k+2} fixed
            P2.u.u[k + 1].first = P2.u.u[k].first / P.c;
        }
        if (!same_pieces(standard_lift(P2), O)) all = false;
    }
    rep.add("7.uniqueness_in_standard_form", all, nullptr, sw.ms());
}

void criterion_8(Report& rep, long pf_max) {
    Stopwatch sw;
    bool all = true;
    std::vector<std::pair<long, long>> cases;
    for (auto [p, f] : {std::pair<long, long>{2, 2}, {2, 3}, {2, 4}, {3, 2},
                        {5, 1}, {7, 1}, {11, 1}, {13, 1}})
        if (ipow(p, f) <= pf_max) cases.push_back({p, f});
    for (auto [p, f] : cases) {
        LiftParams P = default_lift_params(p, f);
        MTable T = m_table(P);
        bool ok = T.exchange_holds();
        for (long q = 0; q < f; ++q) ok = ok && T.sum_over_i(q) == T.degt * T.kappa / (p - 1);
        for (long a : T.a) ok = ok && a == 1;
        // ordering-independence of digit paths (exhaustive for p^f <= 9)
        if (ipow(p, f) <= 9) {
            auto xs = standard_lift_scalars(P);
            long k = T.kappa;
            std::vector<long> steps(f);
            long pq = 1;
            for (long q = 0; q < f; ++q) { steps[q] = pq % k; pq *= p; }
            for (long i = 0; i < k && ok; ++i)
                for (long j = 0; j < k && ok; ++j) {
                    if (i == j) continue;
                    long delta = ((j - i) % k + k) % k;
                    std::vector<long> word;
                    long dd = delta;
                    for (long q = 0; q < f; ++q) {
                        for (long r = 0; r < dd % p; ++r) word.push_back(q);
                        dd /= p;
                    }
                    std::sort(word.begin(), word.end());
                    do {
                        KtScalar acc = kt_one(P);
                        long pos = i;
                        for (long q : word) {
                            acc = kt_mul(P, acc, xs.at({pos, (pos + steps[q]) % k}));
                            pos = (pos + steps[q]) % k;
                        }
                        if (!kt_eq(acc, xs.at({i, j}))) ok = false;
                    } while (ok && std::next_permutation(word.begin(), word.end()));
                }
        }
        // duality pairing on piece indices
        BlockOrder O = standard_lift(P);
        auto mlat = piece_m_values(O, P);
        for (long i = 0; i < T.kappa && ok; ++i)
            for (long j = 0; j < T.kappa && ok; ++j) {
                if (i == j) continue;
                if (mlat.at({i, j}) + mlat.at({j, i}) != f) ok = false;
            }
        if (!ok) {
            all = false;
            rep.add("8.mtable." + std::to_string(p) + "." + std::to_string(f), false);
        }
    }
    rep.add("8.m_table_suite", all, {{"cases", cases.size()}}, sw.ms());
}

void criterion_9(Report& rep, const std::string& fixtures) {
    Stopwatch sw;
    DecompFixture fx = load_fixture(fixtures, "sl2_4.json");
    GradedAlgebra K2(koshita_presentation(2));
    NebeResult R = nebe_order(fx, K2);
    rep.add("9.nebe_sl2_4", R.report.pass(), nullptr, sw.ms());
    if (!R.report.pass()) rep.merge(R.report, "9.detail");

    Stopwatch sw8;
    try {
        DecompFixture fx8 = load_fixture(fixtures, "sl2_8.json");
        GradedAlgebra K3(koshita_presentation(3));
        NebeResult R8 = nebe_order(fx8, K3);
        rep.add("9.nebe_sl2_8_stretch", R8.report.pass(), {{"gating", false}}, sw8.ms());
    } catch (const std::exception& e) {
        rep.add("9.nebe_sl2_8_stretch", false, {{"gating", false}, {"error", e.what()}}, sw8.ms());
    }
}

void criterion_10(Report& rep, unsigned long seed) {
    Stopwatch sw;
    bool all = true;
    std::mt19937_64 rng(seed + 1);
    for (auto [p, f] : {std::pair<long, long>{2, 2}, {3, 1}}) {
        GradedAlgebra A(delta_presentation(p, f));
        const Field& k = A.field();
        long nv = A.pres().nverts;
        auto zb = A.center_basis(-1);
        auto scalar_vec = [&](long code) {
            SparseVec v;
            for (long vtx = 0; vtx < nv; ++vtx) v[A.vertex_elt(vtx)] = code;
            return v;
        };
        auto random_scalar_units = [&]() {
            std::vector<SparseVec> z;
            for (long q = 0; q < f; ++q) z.push_back(scalar_vec(1 + (long)(rng() % (k.q() - 1))));
            return z;
        };
        auto random_unipotent = [&]() {
            std::vector<SparseVec> z;
            for (long q = 0; q < f; ++q) {
                SparseVec v = scalar_vec(1);
                for (const auto& zc : zb)
                    for (const auto& [b, coef] : zc)
                        if (A.basis()[b].deg > 0 && (rng() % 2)) {
                            long mixed = k.mul(coef, (long)(1 + rng() % (k.q() - 1)));
                            v = A.add(v, SparseVec{{b, mixed}});
                        }
                z.push_back(v);
            }
            return z;
        };
        auto random_general = [&]() {
            auto z = random_unipotent();
            for (auto& v : z) {
                long c = 1 + (long)(rng() % (k.q() - 1));
                SparseVec scaled;
                for (auto& [b, coef] : v) scaled[b] = k.mul(coef, c);
                v = scaled;
            }
            return z;
        };
        // 20 trials; the composition identity psi(z) psi(z') = psi(z z') is
        // checked on pairs where it provably holds (z unipotent, or z'
        // scalar); relation preservation is checked for general units
        for (int t = 0; t < 20; ++t) {
            std::vector<SparseVec> z, zp;
            if (t % 2 == 0) {
                z = random_unipotent();
                zp = random_general();
            } else {
                z = random_general();
                zp = random_scalar_units();
            }
            Report r = psi_twist_report(A, z, zp);
            if (!r.pass()) {
                all = false;
                rep.merge(r, "10.fail." + std::to_string(p) + "." + std::to_string(f));
                break;
            }
        }
    }
    rep.add("10.psi_twists", all, nullptr, sw.ms());
}

void criterion_11(Report& rep, unsigned long seed) {
    Stopwatch sw;
    std::mt19937_64 rng(seed + 2);
    bool all = true;

    // dual involution on 100 random full lattices with random admissible u
    long done = 0;
    while (done < 100) {
        long p = (done % 2) ? 2 : 3;
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
        std::vector<std::vector<Rat>> F(D, std::vector<Rat>(D, 0));
        for (long i = 0; i < D; ++i)
            F[i][i] = p_pow(p, (long)(rng() % 5) - 2) * Rat(1 + p * (long)(rng() % 4));
        Lattice Ld = lat_dual_pairing(p, F, L);
        if (!(lat_dual_pairing(p, F, Ld) == L)) all = false;
        ++done;
    }
    rep.add("11.dual_involution", all, nullptr, sw.ms());

    // T_u associativity on 1000 random triples
    Stopwatch sw2;
    Ambient A;
    A.p = 2;
    A.blocks = {{1, false, 0}, {2, false, 0}};
    SymmElem u;
    u.u = {{Rat(3) / 4, 0}, {Rat(1) / 4, 0}};
    bool assoc = true;
    for (int t = 0; t < 1000; ++t) {
        auto rnd = [&]() {
            AlgElem x(A);
            for (auto& v : x.v) v = Rat((long)(rng() % 13) - 6) / Rat(1 + (long)(rng() % 4));
            return x;
        };
        AlgElem a = rnd(), b = rnd(), c = rnd();
        if (trace_form(A, u, alg_mul(a, b), c) != trace_form(A, u, a, alg_mul(b, c))) assoc = false;
    }
    rep.add("11.trace_form_associativity", assoc, nullptr, sw2.ms());

    // idx additivity on random chains
    Stopwatch sw3;
    bool addv = true;
    for (int t = 0; t < 100; ++t) {
        long p = 3, D = 3;
        auto rnd_lat = [&]() {
            std::vector<std::vector<Rat>> rows(D, std::vector<Rat>(D, 0));
            for (long i = 0; i < D; ++i)
                for (long j = 0; j < D; ++j) rows[i][j] = Rat((long)(rng() % 9) - 4);
            return rows;
        };
        Lattice L1, L2, L3;
        try {
            L1 = hnf(p, D, rnd_lat());
            L2 = hnf(p, D, rnd_lat());
            L3 = hnf(p, D, rnd_lat());
        } catch (const std::domain_error&) {
            continue;
        }
        if (idx(L1, L3) != idx(L1, L2) + idx(L2, L3)) addv = false;
    }
    rep.add("11.idx_additivity", addv, nullptr, sw3.ms());

    // HNF canonicality under random unimodular transforms
    Stopwatch sw4;
    bool canon = true;
    for (int t = 0; t < 100; ++t) {
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
            continue;
        }
        auto tr = L.rows;
        for (int step = 0; step < 12; ++step) {
            long i = (long)(rng() % D), j = (long)(rng() % D);
            if (i == j) continue;
            long c = (long)(rng() % 7) - 3;
            for (long t2 = 0; t2 < D; ++t2) tr[i][t2] += Rat(c) * tr[j][t2];
        }
        long i = (long)(rng() % D);
        Rat unit = Rat(1 + p * (long)(rng() % 5)) / Rat(1 + p * (long)(rng() % 5));
        for (long t2 = 0; t2 < D; ++t2) tr[i][t2] *= unit;
        if (!(hnf(p, D, tr) == L)) canon = false;
    }
    rep.add("11.hnf_canonicality", canon, nullptr, sw4.ms());
}

} // namespace

Report run_acceptance(const std::string& fixtures_dir, unsigned long seed, long pf_max) {
    Report rep;
    rep.suite = "acceptance";
    criterion_1(rep);
    criterion_2(rep, fixtures_dir);
    criterion_3(rep);
    criterion_4(rep);
    criterion_5(rep);
    criterion_6(rep);
    criterion_7(rep, seed);
    criterion_8(rep, pf_max);
    criterion_9(rep, fixtures_dir);
    criterion_10(rep, seed);
    criterion_11(rep, seed);
    return rep;
}

bool gating_pass(const Report& rep) {
    for (const auto& c : rep.checks) {
        if (c.details.is_object() && c.details.contains("gating") &&
            c.details["gating"] == false)
            continue;
        if (!c.pass) return false;
    }
    return true;
}

} // namespace ordlift

#include "ordlift/grpalg.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace ordlift {

namespace {
long pow_mod_m(long p, long e, long m) {
    long r = 1 % m;
    for (long i = 0; i < e; ++i) r = (r * p) % m;
    return r;
}
} // namespace

DeltaGroup::DeltaGroup(long p, long f) : F_(p, f), p_(p), f_(f) {
    q_ = F_.q();
    n_ = q_ * (q_ - 1);
}

long DeltaGroup::mul(long g, long h) const {
    auto [a, b] = elem(g);
    auto [a2, b2] = elem(h);
    // (a,b)(a',b') = (a a', a b' + b a'^{-1})
    long a3 = F_.mul(a, a2);
    long b3 = F_.add(F_.mul(a, b2), F_.mul(b, F_.inv(a2)));
    return id_of(a3, b3);
}

long DeltaGroup::inv(long g) const {
    auto [a, b] = elem(g);
    return id_of(F_.inv(a), F_.neg(b));
}

bool GroupAlgElem::is_zero() const {
    for (long x : c)
        if (x != 0) return false;
    return true;
}

long GroupAlgElem::support_size() const {
    long s = 0;
    for (long x : c)
        if (x != 0) ++s;
    return s;
}

GroupAlgElem ga_add(const GroupAlgElem& x, const GroupAlgElem& y) {
    GroupAlgElem r(*x.G);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.G->field().add(x.c[i], y.c[i]);
    return r;
}

GroupAlgElem ga_sub(const GroupAlgElem& x, const GroupAlgElem& y) {
    GroupAlgElem r(*x.G);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.G->field().sub(x.c[i], y.c[i]);
    return r;
}

GroupAlgElem ga_scale(const GroupAlgElem& x, long code) {
    GroupAlgElem r(*x.G);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.G->field().mul(x.c[i], code);
    return r;
}

GroupAlgElem ga_mul(const GroupAlgElem& x, const GroupAlgElem& y) {
    GroupAlgElem r(*x.G);
    const Field& F = x.G->field();
    for (long g = 0; g < (long)x.c.size(); ++g) {
        if (x.c[g] == 0) continue;
        for (long h = 0; h < (long)y.c.size(); ++h) {
            if (y.c[h] == 0) continue;
            long gh = x.G->mul(g, h);
            r.c[gh] = F.add(r.c[gh], F.mul(x.c[g], y.c[h]));
        }
    }
    return r;
}

GroupAlgElem ga_one(const DeltaGroup& G) {
    GroupAlgElem r(G);
    r.c[G.identity()] = 1;
    return r;
}

bool ga_eq(const GroupAlgElem& x, const GroupAlgElem& y) { return x.c == y.c; }

std::vector<GroupAlgElem> char_idempotents(const DeltaGroup& G) {
    const Field& F = G.field();
    long m = G.q() - 1; // |A|
    long invA = F.inv(F.scalar(m % G.p()));
    std::vector<GroupAlgElem> es;
    for (long i = 0; i < m; ++i) {
        GroupAlgElem e(G);
        for (long k = 0; k < m; ++k) {
            long a = F.exp(k);                 // runs over A
            long chi = F.pow(a, i);            // chi_i(a) = a^i
            long gid = G.id_of(F.inv(a), 0);   // coefficient sits on a^{-1}
            e.c[gid] = F.add(e.c[gid], F.mul(invA, chi));
        }
        es.push_back(std::move(e));
    }
    return es;
}

std::vector<RadicalVec> radical_eigenbasis(const DeltaGroup& G) {
    const Field& F = G.field();
    long q = G.q(), m = q - 1;

    // t_w = sum_b b^{-w} x_{(1,b)}  (t_0 includes b = 0 so it lies in Jac)
    std::vector<GroupAlgElem> t;
    for (long w = 0; w < m; ++w) {
        GroupAlgElem v(G);
        if (w == 0) {
            for (long b = 0; b < q; ++b) v.c[G.id_of(1, b)] = 1;
        } else {
            for (long k = 0; k < m; ++k) {
                long b = F.exp(k);
                v.c[G.id_of(1, b)] = F.pow(b, -w + m); // b^{-w}
            }
        }
        t.push_back(std::move(v));
    }

    auto normalize = [&](GroupAlgElem v) {
        for (long i = 0; i < (long)v.c.size(); ++i)
            if (v.c[i] != 0) return ga_scale(v, F.inv(v.c[i]));
        return v;
    };
    auto lex_less = [](const GroupAlgElem& a, const GroupAlgElem& b) { return a.c < b.c; };

    // eigenspaces of the conjugation action, keyed by weight 2w mod m
    std::vector<RadicalVec> out;
    std::vector<char> used(m, 0);
    struct Space { long weight; std::vector<long> ws; };
    std::vector<Space> spaces;
    for (long w = 0; w < m; ++w) {
        if (used[w]) continue;
        long weight = (2 * w) % m;
        Space s{weight, {w}};
        used[w] = 1;
        if (G.p() != 2) {
            long w2 = (w + m / 2) % m;
            if (!used[w2]) { s.ws.push_back(w2); used[w2] = 1; }
        }
        spaces.push_back(std::move(s));
    }
    std::sort(spaces.begin(), spaces.end(), [](const Space& a, const Space& b) { return a.weight < b.weight; });

    for (const auto& s : spaces) {
        std::vector<GroupAlgElem> cands;
        if (s.ws.size() == 1) {
            cands.push_back(normalize(t[s.ws[0]]));
        } else {
            // all lines of the 2-dimensional eigenspace
            cands.push_back(normalize(t[s.ws[1]]));
            for (long code = 0; code < q; ++code)
                cands.push_back(normalize(ga_add(t[s.ws[0]], ga_scale(t[s.ws[1]], code))));
        }
        std::sort(cands.begin(), cands.end(), [&](const GroupAlgElem& a, const GroupAlgElem& b) {
            long sa = a.support_size(), sb = b.support_size();
            if (sa != sb) return sa < sb;
            return lex_less(a, b);
        });
        // greedily take an independent set of the right size
        std::vector<std::vector<long>> rows;
        size_t need = s.ws.size();
        for (const auto& cand : cands) {
            if (rows.size() == need) break;
            auto trial = rows;
            trial.push_back(cand.c);
            if (rank_of(F, trial) == (long)trial.size()) {
                rows.push_back(cand.c);
                RadicalVec rv{cand, s.weight, false};
                out.push_back(std::move(rv));
            }
        }
    }

    // Jac^2 of kP, for the marking step
    std::vector<std::vector<long>> jac2;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) jac2.push_back(ga_mul(t[i], t[j]).c);
    Echelon E2 = echelonize(F, jac2);

    // mark one generator per Frobenius weight 2 p^j
    for (long j = 0; j < G.f(); ++j) {
        long target = m == 1 ? 0 : (2 * pow_mod_m(G.p(), j, m)) % m;
        bool done = false;
        for (auto& rv : out) {
            if (rv.weight != target || rv.marked) continue;
            std::vector<std::vector<long>> trial = E2.rows;
            for (const auto& o : out)
                if (o.marked) trial.push_back(o.v.c);
            long base = rank_of(F, trial);
            trial.push_back(rv.v.c);
            if (rank_of(F, trial) == base + 1) {
                rv.marked = true;
                done = true;
                break;
            }
        }
        if (!done) throw std::logic_error("radical_eigenbasis: could not mark a generator "
                                          "(field construction bug)");
    }
    return out;
}

XSet x_set(const DeltaGroup& G) {
    auto basis = radical_eigenbasis(G);
    XSet x;
    x.modulus = G.q() - 1;
    for (const auto& rv : basis)
        if (rv.marked) x.residues.push_back(rv.weight);
    std::sort(x.residues.begin(), x.residues.end());
    return x;
}

std::vector<std::vector<long>> cartan_from_group(const DeltaGroup& G) {
    const Field& F = G.field();
    long m = G.q() - 1;
    auto es = char_idempotents(G);
    std::vector<std::vector<long>> C(m, std::vector<long>(m, 0));
    // e_i kG e_j is spanned by e_i x_b e_j (b in P): the kA factor collapses
    // onto the idempotent.
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            std::vector<std::vector<long>> rows;
            for (long b = 0; b < G.q(); ++b) {
                GroupAlgElem xb(G);
                xb.c[G.id_of(1, b)] = 1;
                rows.push_back(ga_mul(ga_mul(es[i], xb), es[j]).c);
            }
            C[i][j] = rank_of(F, std::move(rows));
        }
    return C;
}

long class_count(const DeltaGroup& G) {
    long n = G.order();
    std::vector<char> seen(n, 0);
    long classes = 0;
    for (long g = 0; g < n; ++g) {
        if (seen[g]) continue;
        ++classes;
        for (long h = 0; h < n; ++h) seen[G.mul(G.mul(h, g), G.inv(h))] = 1;
    }
    return classes;
}

Report verify_group_quiver_iso(const DeltaGroup& G, const Presentation& P,
                               const GradedAlgebra* A) {
    Report rep;
    rep.suite = "group_quiver_iso";
    const Field& F = G.field();
    long m = G.q() - 1;

    auto es = char_idempotents(G);
    auto rad = radical_eigenbasis(G);
    // s_psi for psi = 2 p^q: the marked eigenvector of that weight
    std::vector<GroupAlgElem> s;
    for (long qq = 0; qq < G.f(); ++qq) {
        long target = m == 1 ? 0 : (2 * pow_mod_m(G.p(), qq, m)) % m;
        const GroupAlgElem* found = nullptr;
        for (const auto& rv : rad)
            if (rv.marked && rv.weight == target) { found = &rv.v; break; }
        if (!found) throw std::logic_error("missing marked eigenvector");
        s.push_back(*found);
    }

    // vertex v of Q -> e_{-v}; arrow s_{v,q} -> e_{-v} s_q (left-conjugation
    // weights put e_i t = t e_{i - psi}, so the quiver's +[q] step matches
    // the group side after inverting the character labels)
    auto vmap = [&](long v) { return ((-v) % m + m) % m; };
    auto arrow_image = [&](long a) {
        const Arrow& ar = P.arrows[a];
        return ga_mul(es[vmap(ar.src)], s[ar.cls]);
    };
    // arrows land in the right corner
    bool corner_ok = true;
    for (long a = 0; a < (long)P.arrows.size(); ++a) {
        const Arrow& ar = P.arrows[a];
        GroupAlgElem im = arrow_image(a);
        GroupAlgElem proj = ga_mul(ga_mul(es[vmap(ar.src)], im), es[vmap(ar.dst)]);
        if (!ga_eq(im, proj)) { corner_ok = false; break; }
    }
    rep.add("arrows_in_corners", corner_ok);

    bool all_rel = true;
    for (const auto& r : P.relations) {
        GroupAlgElem acc(G);
        for (const auto& t : r.terms) {
            GroupAlgElem cur = ga_scale(ga_one(G), F.scalar(t.coef));
            for (long a : t.word) cur = ga_mul(cur, arrow_image(a));
            acc = ga_add(acc, cur);
        }
        if (!acc.is_zero()) {
            all_rel = false;
            rep.add("relation." + r.label, false);
        }
    }
    rep.add("relations_hold", all_rel, {{"count", P.relations.size()}});

    // dimension + surjectivity: the images of a quotient basis span kG
    std::unique_ptr<GradedAlgebra> local;
    if (!A) {
        local = std::make_unique<GradedAlgebra>(P);
        A = local.get();
    }
    rep.add("dimension", A->total_dim() == G.order(),
            {{"quotient_dim", A->total_dim()}, {"group_dim", G.order()}});
    std::vector<std::vector<long>> rows;
    for (const auto& b : A->basis()) {
        GroupAlgElem im = es[vmap(b.src)];
        for (long a : b.word) im = ga_mul(im, s[P.arrows[a].cls]);
        rows.push_back(im.c);
    }
    long rk = rank_of(F, std::move(rows));
    rep.add("surjective", rk == G.order(), {{"rank", rk}});
    return rep;
}

} // namespace ordlift

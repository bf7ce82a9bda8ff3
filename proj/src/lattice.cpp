#include "ordlift/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ordlift {

namespace {

Rat canonical_residue(const Rat& e, long p, long k) {
    if (e == 0) return 0;
    long v = vp(e, p);
    if (v >= k) return 0;
    Rat shifted = e / p_pow(p, v);
    return p_pow(p, v) * Rat(mod_ppow(shifted, p, k - v));
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> M) {
    long n = (long)M.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (long i = 0; i < n; ++i) inv[i][i] = 1;
    for (long c = 0; c < n; ++c) {
        long pr = -1;
        for (long r = c; r < n; ++r)
            if (M[r][c] != 0) { pr = r; break; }
        if (pr < 0) throw std::domain_error("rat_inverse: singular matrix");
        std::swap(M[c], M[pr]);
        std::swap(inv[c], inv[pr]);
        Rat piv = M[c][c];
        for (long j = 0; j < n; ++j) { M[c][j] /= piv; inv[c][j] /= piv; }
        for (long r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rat f = M[r][c];
            for (long j = 0; j < n; ++j) {
                M[r][j] -= f * M[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

long rat_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    long ncols = (long)rows[0].size(), rank = 0;
    for (long c = 0; c < ncols && rank < (long)rows.size(); ++c) {
        long pr = -1;
        for (long r = rank; r < (long)rows.size(); ++r)
            if (rows[r][c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        for (long r = rank + 1; r < (long)rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            Rat f = rows[r][c] / rows[rank][c];
            for (long j = c; j < ncols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

AlgElem alg_one(const Ambient& A) {
    AlgElem x(A);
    for (long b = 0; b < (long)A.blocks.size(); ++b)
        for (long i = 0; i < A.blocks[b].n; ++i) x.v[A.coord(b, i, i, 0)] = 1;
    return x;
}

AlgElem alg_add(const AlgElem& x, const AlgElem& y) {
    AlgElem r(*x.amb);
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = x.v[i] + y.v[i];
    return r;
}

AlgElem alg_sub(const AlgElem& x, const AlgElem& y) {
    AlgElem r(*x.amb);
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = x.v[i] - y.v[i];
    return r;
}

AlgElem alg_scale(const AlgElem& x, const Rat& c) {
    AlgElem r(*x.amb);
    for (size_t i = 0; i < r.v.size(); ++i) r.v[i] = x.v[i] * c;
    return r;
}

AlgElem alg_mul(const AlgElem& x, const AlgElem& y) {
    const Ambient& A = *x.amb;
    AlgElem r(A);
    for (long b = 0; b < (long)A.blocks.size(); ++b) {
        const auto& blk = A.blocks[b];
        long n = blk.n;
        if (!blk.quad) {
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) {
                    Rat acc = 0;
                    for (long t = 0; t < n; ++t)
                        acc += x.v[A.coord(b, i, t)] * y.v[A.coord(b, t, j)];
                    r.v[A.coord(b, i, j)] = acc;
                }
        } else {
            Rat dp = blk.d * Rat(A.p);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) {
                    Rat aa = 0, bb = 0;
                    for (long t = 0; t < n; ++t) {
                        const Rat& xa = x.v[A.coord(b, i, t, 0)];
                        const Rat& xb = x.v[A.coord(b, i, t, 1)];
                        const Rat& ya = y.v[A.coord(b, t, j, 0)];
                        const Rat& yb = y.v[A.coord(b, t, j, 1)];
                        aa += xa * ya + dp * xb * yb;
                        bb += xa * yb + xb * ya;
                    }
                    r.v[A.coord(b, i, j, 0)] = aa;
                    r.v[A.coord(b, i, j, 1)] = bb;
                }
        }
    }
    return r;
}

Rat trace_form_lin(const Ambient& A, const SymmElem& u, const AlgElem& a) {
    Rat total = 0;
    for (long b = 0; b < (long)A.blocks.size(); ++b) {
        const auto& blk = A.blocks[b];
        if (!blk.quad) {
            Rat t = 0;
            for (long i = 0; i < blk.n; ++i) t += a.v[A.coord(b, i, i)];
            total += u.u[b].first * t;
        } else {
            Rat ta = 0, tb = 0;
            for (long i = 0; i < blk.n; ++i) {
                ta += a.v[A.coord(b, i, i, 0)];
                tb += a.v[A.coord(b, i, i, 1)];
            }
            Rat dp = blk.d * Rat(A.p);
            // tr_{K(pi)/K}(u t) = 2 (u_a t_a + d p u_b t_b)
            total += 2 * (u.u[b].first * ta + dp * u.u[b].second * tb);
        }
    }
    return total;
}

Rat trace_form(const Ambient& A, const SymmElem& u, const AlgElem& a, const AlgElem& b) {
    return trace_form_lin(A, u, alg_mul(a, b));
}

Lattice hnf(long p, long D, std::vector<std::vector<Rat>> gens) {
    for (const auto& r : gens)
        if ((long)r.size() != D) throw std::domain_error("hnf: row length mismatch");
    std::vector<std::vector<Rat>> done;
    std::vector<long> done_piv;
    long next = 0; // rows before 'next' in gens are dead (zeroed)
    for (long c = 0; c < D; ++c) {
        long pr = -1;
        long best = VAL_INF;
        for (long r = next; r < (long)gens.size(); ++r) {
            if (gens[r][c] == 0) continue;
            long v = vp(gens[r][c], p);
            if (v < best) { best = v; pr = r; }
        }
        if (pr < 0) continue;
        std::swap(gens[next], gens[pr]);
        long k = best;
        Rat unit = gens[next][c] / p_pow(p, k);
        for (long j = 0; j < D; ++j) gens[next][j] /= unit;
        // clear below
        for (long r = next + 1; r < (long)gens.size(); ++r) {
            if (gens[r][c] == 0) continue;
            Rat q = gens[r][c] / p_pow(p, k);
            for (long j = 0; j < D; ++j) gens[r][j] -= q * gens[next][j];
        }
        // reduce the finished rows above the pivot
        for (size_t i = 0; i < done.size(); ++i) {
            const Rat& e = done[i][c];
            if (e == 0) continue;
            Rat res = canonical_residue(e, p, k);
            Rat q = (e - res) / p_pow(p, k);
            if (q != 0)
                for (long j = 0; j < D; ++j) done[i][j] -= q * gens[next][j];
        }
        done.push_back(gens[next]);
        done_piv.push_back(c);
        ++next;
    }
    if ((long)done.size() != D) throw std::domain_error("hnf: rank deficient lattice basis");
    Lattice L;
    L.p = p;
    L.D = D;
    L.rows = std::move(done);
    return L;
}

Lattice lat_scale(const Lattice& L, const Rat& c) {
    if (c == 0) throw std::domain_error("lat_scale by zero");
    auto rows = L.rows;
    for (auto& r : rows)
        for (auto& x : r) x *= c;
    return hnf(L.p, L.D, std::move(rows));
}

Lattice lat_sum(const Lattice& a, const Lattice& b) {
    auto rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return hnf(a.p, a.D, std::move(rows));
}

Lattice lat_dual_std(const Lattice& L) {
    // {x : x B^T integral}: rows of (B^{-1})^T
    auto inv = rat_inverse(L.rows);
    std::vector<std::vector<Rat>> rows(L.D, std::vector<Rat>(L.D, 0));
    for (long i = 0; i < L.D; ++i)
        for (long j = 0; j < L.D; ++j) rows[i][j] = inv[j][i];
    return hnf(L.p, L.D, std::move(rows));
}

Lattice lat_intersect(const Lattice& a, const Lattice& b) {
    return lat_dual_std(lat_sum(lat_dual_std(a), lat_dual_std(b)));
}

bool lat_contains(const Lattice& L, const std::vector<Rat>& v) {
    // back-substitution against the upper-triangular HNF basis
    std::vector<Rat> w = v;
    for (long i = 0; i < L.D; ++i) {
        const Rat& piv = L.rows[i][i];
        if (w[i] == 0) continue;
        Rat q = w[i] / piv;
        if (!p_integral(q, L.p)) return false;
        for (long j = i; j < L.D; ++j) w[j] -= q * L.rows[i][j];
    }
    for (const auto& x : w)
        if (x != 0) return false;
    return true;
}

long vdet(const Lattice& L) {
    long v = 0;
    for (long i = 0; i < L.D; ++i) v += vp(L.rows[i][i], L.p);
    return v;
}

Rat idx(const Lattice& L1, const Lattice& L2) {
    if (L1.D != L2.D || L1.p != L2.p) throw std::domain_error("idx: ambient mismatch");
    return Rat(vdet(L2) - vdet(L1)) / Rat(L1.D);
}

Lattice lat_dual_pairing(long p, const std::vector<std::vector<Rat>>& G, const Lattice& M) {
    long D = (long)G.size();
    // rows of ((G B^T)^{-1})^T
    std::vector<std::vector<Rat>> GBt(D, std::vector<Rat>(M.D, 0));
    for (long i = 0; i < D; ++i)
        for (long j = 0; j < M.D; ++j) {
            Rat acc = 0;
            for (long t = 0; t < (long)G[i].size(); ++t) acc += G[i][t] * M.rows[j][t];
            GBt[i][j] = acc;
        }
    // x in dual iff x (G B^T) is integral, so the dual basis rows are (G B^T)^{-1}
    auto rows = rat_inverse(GBt);
    return hnf(p, D, std::move(rows));
}

std::vector<std::tuple<long, long, long>> BlockOrder::corner_coords(long i, long j) const {
    std::vector<std::tuple<long, long, long>> out;
    for (long b = 0; b < (long)amb.blocks.size(); ++b) {
        long pi = -1, pj = -1;
        for (const auto& [bb, pos] : idem[i])
            if (bb == b) pi = pos;
        for (const auto& [bb, pos] : idem[j])
            if (bb == b) pj = pos;
        if (pi >= 0 && pj >= 0) out.push_back({b, pi, pj});
    }
    return out;
}

long BlockOrder::corner_dim(long i, long j) const {
    long d = 0;
    for (const auto& [b, pi, pj] : corner_coords(i, j)) {
        (void)pi;
        (void)pj;
        d += amb.blocks[b].deg();
    }
    return d;
}

AlgElem BlockOrder::embed(long i, long j, const std::vector<Rat>& cv) const {
    AlgElem x(amb);
    long idx2 = 0;
    for (const auto& [b, pi, pj] : corner_coords(i, j))
        for (long part = 0; part < amb.blocks[b].deg(); ++part)
            x.v[amb.coord(b, pi, pj, part)] = cv[idx2++];
    if (idx2 != (long)cv.size()) throw std::domain_error("embed: corner dim mismatch");
    return x;
}

std::vector<Rat> BlockOrder::project(long i, long j, const AlgElem& x) const {
    std::vector<Rat> cv;
    for (const auto& [b, pi, pj] : corner_coords(i, j))
        for (long part = 0; part < amb.blocks[b].deg(); ++part)
            cv.push_back(x.v[amb.coord(b, pi, pj, part)]);
    return cv;
}

AlgElem BlockOrder::idem_elem(long l) const {
    AlgElem x(amb);
    for (const auto& [b, pos] : idem[l]) x.v[amb.coord(b, pos, pos, 0)] = 1;
    return x;
}

Lattice BlockOrder::assemble() const {
    std::vector<std::vector<Rat>> rows;
    for (const auto& [ij, L] : pieces)
        for (const auto& r : L.rows) rows.push_back(embed(ij.first, ij.second, r).v);
    return hnf(amb.p, amb.dim(), std::move(rows));
}

std::vector<std::vector<Rat>> piece_product_rows(const BlockOrder& O, long i, long j, long l) {
    const Lattice& P1 = O.pieces.at({i, j});
    const Lattice& P2 = O.pieces.at({j, l});
    std::vector<std::vector<Rat>> rows;
    for (const auto& r1 : P1.rows)
        for (const auto& r2 : P2.rows) {
            AlgElem prod = alg_mul(O.embed(i, j, r1), O.embed(j, l, r2));
            rows.push_back(O.project(i, l, prod));
        }
    return rows;
}

Lattice piece_product(const BlockOrder& O, long i, long j, long l) {
    return hnf(O.amb.p, O.corner_dim(i, l), piece_product_rows(O, i, j, l));
}

Report is_order(const BlockOrder& O) {
    Report rep;
    rep.suite = "is_order";
    // identity: each diagonal corner contains its corner identity
    bool idok = true;
    for (long l = 0; l < O.kappa; ++l) {
        auto it = O.pieces.find({l, l});
        if (it == O.pieces.end()) { idok = false; break; }
        auto cv = O.project(l, l, O.idem_elem(l));
        if (!lat_contains(it->second, cv)) {
            idok = false;
            rep.add("identity." + std::to_string(l), false);
        }
    }
    rep.add("identity", idok);

    bool closed = true;
    long failures = 0;
    for (long i = 0; i < O.kappa; ++i)
        for (long j = 0; j < O.kappa; ++j) {
            if (!O.pieces.count({i, j})) continue;
            for (long l = 0; l < O.kappa; ++l) {
                if (!O.pieces.count({j, l})) continue;
                const Lattice& P1 = O.pieces.at({i, j});
                const Lattice& P2 = O.pieces.at({j, l});
                bool target = O.pieces.count({i, l}) > 0;
                for (const auto& r1 : P1.rows)
                    for (const auto& r2 : P2.rows) {
                        AlgElem prod = alg_mul(O.embed(i, j, r1), O.embed(j, l, r2));
                        auto cv = O.project(i, l, prod);
                        bool zero = true;
                        for (const auto& x : cv)
                            if (x != 0) zero = false;
                        bool ok = zero || (target && lat_contains(O.pieces.at({i, l}), cv));
                        if (!ok) {
                            closed = false;
                            if (failures < 16)
                                rep.add("closure." + std::to_string(i) + "." + std::to_string(j) + "." +
                                            std::to_string(l),
                                        false);
                            ++failures;
                        }
                    }
            }
        }
    rep.add("closure", closed, {{"failed_products", failures}});
    return rep;
}

namespace {
// pairing matrix between corner (i,j) coordinates and corner (j,i) coordinates
std::vector<std::vector<Rat>> corner_pairing(const BlockOrder& O, const SymmElem& u, long i, long j) {
    long di = O.corner_dim(i, j), dj = O.corner_dim(j, i);
    std::vector<std::vector<Rat>> G(di, std::vector<Rat>(dj, 0));
    for (long a = 0; a < di; ++a) {
        std::vector<Rat> ea(di, 0);
        ea[a] = 1;
        AlgElem xa = O.embed(i, j, ea);
        for (long b = 0; b < dj; ++b) {
            std::vector<Rat> eb(dj, 0);
            eb[b] = 1;
            G[a][b] = trace_form(O.amb, u, xa, O.embed(j, i, eb));
        }
    }
    return G;
}
} // namespace

Report is_selfdual(const BlockOrder& O, const SymmElem& u) {
    Report rep;
    rep.suite = "is_selfdual";
    // full-lattice dual
    Lattice L = O.assemble();
    long D = O.amb.dim();
    std::vector<std::vector<Rat>> F(D, std::vector<Rat>(D, 0));
    for (long a = 0; a < D; ++a) {
        AlgElem ea(O.amb);
        ea.v[a] = 1;
        for (long b = 0; b < D; ++b) {
            AlgElem eb(O.amb);
            eb.v[b] = 1;
            F[a][b] = trace_form(O.amb, u, ea, eb);
        }
    }
    // dual basis: rows of ((F B^T)^{-1})^T
    Lattice dual = lat_dual_pairing(O.amb.p, F, L);
    rep.add("full_dual_equal", dual == L,
            {{"vdet", vdet(L)}, {"vdet_dual", vdet(dual)}});

    // blockwise pairing: dual of piece (j,i) inside corner (i,j) equals piece (i,j)
    bool pair_ok = true;
    for (const auto& [ij, P] : O.pieces) {
        auto [i, j] = ij;
        if (!O.pieces.count({j, i})) { pair_ok = false; break; }
        auto G = corner_pairing(O, u, i, j);
        Lattice pd = lat_dual_pairing(O.amb.p, G, O.pieces.at({j, i}));
        if (!(pd == P)) {
            pair_ok = false;
            rep.add("pairing." + std::to_string(i) + "." + std::to_string(j), false);
        }
    }
    rep.add("piece_pairing", pair_ok);
    return rep;
}

DecompMatrix decomposition_matrix(const BlockOrder& O) {
    DecompMatrix D;
    const Ambient& A = O.amb;
    for (long b = 0; b < (long)A.blocks.size(); ++b)
        D.row_labels.push_back("V" + std::to_string(b));
    for (long l = 0; l < O.kappa; ++l) D.col_labels.push_back("S" + std::to_string(l));
    D.entries.assign(A.blocks.size(), std::vector<long>(O.kappa, 0));
    for (long l = 0; l < O.kappa; ++l) {
        // the row lattice e_l Lambda
        std::vector<AlgElem> rows;
        for (long j = 0; j < O.kappa; ++j) {
            auto it = O.pieces.find({l, j});
            if (it == O.pieces.end()) continue;
            for (const auto& r : it->second.rows) rows.push_back(O.embed(l, j, r));
        }
        for (long b = 0; b < (long)A.blocks.size(); ++b) {
            long off = A.block_offset(b);
            long len = A.blocks[b].n * A.blocks[b].n * A.blocks[b].deg();
            std::vector<std::vector<Rat>> proj;
            for (const auto& r : rows)
                proj.push_back(std::vector<Rat>(r.v.begin() + off, r.v.begin() + off + len));
            long rk = rat_rank(std::move(proj));
            long unit = A.blocks[b].n * A.blocks[b].deg();
            if (rk % unit != 0)
                throw std::domain_error("decomposition_matrix: non-integral multiplicity");
            D.entries[b][l] = rk / unit;
        }
    }
    return D;
}

} // namespace ordlift

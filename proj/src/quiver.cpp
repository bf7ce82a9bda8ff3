#include "ordlift/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ordlift {

namespace {

long pow_mod(long base, long e, long m) {
    long r = 1 % m;
    base %= m;
    for (long i = 0; i < e; ++i) r = (r * base) % m;
    return r;
}

std::string subset_label(long mask, long f) {
    std::string s = "{";
    bool first = true;
    for (long i = 0; i < f; ++i)
        if (mask & (1L << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

} // namespace

void Presentation::validate() const {
    for (const auto& r : relations) {
        if (r.terms.empty()) throw std::logic_error("empty relation " + r.label);
        size_t len = r.terms[0].word.size();
        long src = -1, dst = -1;
        for (const auto& t : r.terms) {
            if (t.word.size() != len)
                throw std::logic_error("relation not length-homogeneous: " + r.label);
            if (t.word.empty()) throw std::logic_error("empty word in relation " + r.label);
            for (size_t i = 0; i + 1 < t.word.size(); ++i)
                if (arrows[t.word[i]].dst != arrows[t.word[i + 1]].src)
                    throw std::logic_error("non-composable word in relation " + r.label);
            long s = arrows[t.word.front()].src, d = arrows[t.word.back()].dst;
            if (src < 0) { src = s; dst = d; }
            else if (s != src || d != dst)
                throw std::logic_error("relation terms have mismatched endpoints: " + r.label);
        }
    }
}

long Presentation::arrow_at(long src, long cls) const {
    for (size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].src == src && arrows[a].cls == cls) return (long)a;
    return -1;
}

Presentation delta_presentation(long p, long f) {
    Presentation P;
    P.p = p;
    P.f = f;
    P.kind = "delta";
    long q = 1;
    for (long i = 0; i < f; ++i) q *= p;
    long n = q - 1;
    P.nverts = n;
    for (long i = 0; i < n; ++i) P.vlabels.push_back("e" + std::to_string(i));
    P.block_of_vertex.assign(n, 0);
    if (p != 2)
        for (long i = 0; i < n; ++i) P.block_of_vertex[i] = i % 2;

    std::vector<long> step(f);
    for (long qq = 0; qq < f; ++qq) step[qq] = (2 * pow_mod(p, qq, n)) % n;

    for (long i = 0; i < n; ++i)
        for (long qq = 0; qq < f; ++qq) {
            std::ostringstream lbl;
            lbl << "s_{" << i << "," << qq << "}";
            P.arrows.push_back({i, (i + step[qq]) % n, lbl.str(), qq});
        }
    auto arr = [&](long i, long qq) { return P.arrow_at(((i % n) + n) % n, qq); };

    // commutation: s_{i,q} s_{i+[q],q'} = s_{i,q'} s_{i+[q'],q}
    for (long i = 0; i < n; ++i)
        for (long qa = 0; qa < f; ++qa)
            for (long qb = qa + 1; qb < f; ++qb) {
                Relation r;
                r.label = "comm(" + std::to_string(i) + "," + std::to_string(qa) + "," + std::to_string(qb) + ")";
                r.terms.push_back({1, {arr(i, qa), arr(i + step[qa], qb)}});
                r.terms.push_back({p - 1, {arr(i, qb), arr(i + step[qb], qa)}});
                P.relations.push_back(std::move(r));
            }
    // p-th power: product of p consecutive [q]-arrows vanishes
    for (long i = 0; i < n; ++i)
        for (long qq = 0; qq < f; ++qq) {
            Relation r;
            r.label = "pow(" + std::to_string(i) + "," + std::to_string(qq) + ")";
            RelTerm t{1, {}};
            for (long l = 0; l < p; ++l) t.word.push_back(arr(i + l * step[qq], qq));
            r.terms.push_back(std::move(t));
            P.relations.push_back(std::move(r));
        }
    P.grading_cap = std::max(4 * f, f * (p - 1) + 1);
    P.validate();
    return P;
}

Presentation koshita_presentation(long f) {
    if (f < 2)
        throw std::domain_error("koshita_presentation: f >= 2 required "
                                "(the f=1 relation families degenerate)");
    Presentation P;
    P.p = 2;
    P.f = f;
    P.kind = "koshita";
    long nv = 1L << f;
    P.nverts = nv;
    for (long m = 0; m < nv; ++m) P.vlabels.push_back(subset_label(m, f));
    P.block_of_vertex.assign(nv, 0);

    auto inI = [&](long mask, long i) { return (mask >> (((i % f) + f) % f)) & 1; };
    auto tog = [&](long mask, long i) { return mask ^ (1L << (((i % f) + f) % f)); };

    // arrow (i, I): element of e_I A e_{I+{i}}, present iff i-1 not in I
    for (long I = 0; I < nv; ++I)
        for (long i = 0; i < f; ++i)
            if (!inI(I, i - 1)) {
                std::ostringstream lbl;
                lbl << "a_{" << i << "," << subset_label(I, f) << "}";
                P.arrows.push_back({I, tog(I, i), lbl.str(), i});
            }
    auto arr = [&](long i, long I) { return P.arrow_at(I, ((i % f) + f) % f); };

    // (1) far-apart commutation
    for (long I = 0; I < nv; ++I)
        for (long i = 0; i < f; ++i)
            for (long j = i + 1; j < f; ++j) {
                if (inI(I, i - 1) || inI(I, j - 1)) continue;
                long d = (j - i) % f;
                if (d == 1 || d == f - 1 || d == 0) continue; // j in {i-1,i,i+1}
                Relation r;
                r.label = "comm(" + std::to_string(i) + "," + std::to_string(j) + "," + subset_label(I, f) + ")";
                r.terms.push_back({1, {arr(i, I), arr(j, tog(I, i))}});
                r.terms.push_back({1, {arr(j, I), arr(i, tog(I, j))}});
                P.relations.push_back(std::move(r));
            }
    // (2) the vanishing two-step loop at I+{i}: alpha_{i,I+{i}} alpha_{i,I}
    for (long I = 0; I < nv; ++I)
        for (long i = 0; i < f; ++i) {
            if (inI(I, i) || inI(I, i - 1)) continue;
            Relation r;
            r.label = "sq(" + std::to_string(i) + "," + subset_label(I, f) + ")";
            r.terms.push_back({1, {arr(i, tog(I, i)), arr(i, I)}});
            P.relations.push_back(std::move(r));
        }
    // (3) bounce at I commutes past the adjacent arrow (f >= 3)
    for (long I = 0; I < nv; ++I)
        for (long i = 0; i < f; ++i) {
            if (inI(I, i) || inI(I, i - 1)) continue;
            long w1a = arr(i + 1, I), w1b = arr(i, tog(I, i + 1)), w1c = arr(i, tog(tog(I, i), i + 1));
            long w2a = arr(i, I), w2b = arr(i, tog(I, i)), w2c = arr(i + 1, I);
            if (w1a < 0 || w1b < 0 || w1c < 0 || w2a < 0 || w2b < 0 || w2c < 0) continue;
            Relation r;
            r.label = "adj(" + std::to_string(i) + "," + subset_label(I, f) + ")";
            r.terms.push_back({1, {w1a, w1b, w1c}});
            r.terms.push_back({1, {w2a, w2b, w2c}});
            P.relations.push_back(std::move(r));
        }
    // (4) remove i, toggle i+1, add i back (f >= 3)
    for (long I = 0; I < nv; ++I)
        for (long i = 0; i < f; ++i) {
            if (!inI(I, i) || inI(I, i - 1)) continue;
            long wa = arr(i, tog(I, i + 1)), wb = arr(i + 1, tog(tog(I, i), i + 1)), wc = arr(i, tog(I, i));
            if (wa < 0 || wb < 0 || wc < 0) continue;
            Relation r;
            r.label = "zig(" + std::to_string(i) + "," + subset_label(I, f) + ")";
            r.terms.push_back({1, {wa, wb, wc}});
            P.relations.push_back(std::move(r));
        }
    // f = 2: families (1), (3), (4) are empty (their words leave the quiver);
    // the surviving degenerate instance is commutation of the two bounces at {}.
    if (f == 2) {
        Relation r;
        r.label = "adj-degenerate";
        r.terms.push_back({1, {arr(0, 0), arr(0, 1), arr(1, 0), arr(1, 2)}});
        r.terms.push_back({1, {arr(1, 0), arr(1, 2), arr(0, 0), arr(0, 1)}});
        P.relations.push_back(std::move(r));
    }
    P.grading_cap = 4 * f;
    P.validate();
    return P;
}

GradedAlgebra::GradedAlgebra(Presentation pres, ElimMode mode)
    : pres_(std::move(pres)), k_(pres_.p, pres_.f) {
    build(mode);
}

long GradedAlgebra::degree_dim(long d) const {
    if (d < 0 || d + 1 >= (long)deg_begin_.size()) return 0;
    return deg_begin_[d + 1] - deg_begin_[d];
}

long GradedAlgebra::arrow_elt(long a) const { return arrow_basis_id_[a]; }

void GradedAlgebra::build(ElimMode mode) {
    const long nv = pres_.nverts;
    deg_begin_ = {0, nv};
    basis_.clear();
    for (long v = 0; v < nv; ++v) basis_.push_back({0, v, v, {}});
    rmul_.resize(nv);
    arrow_basis_id_.assign(pres_.arrows.size(), -1);

    long d = 0; // highest completed degree
    while (true) {
        // candidates: (basis elt of degree d) * arrow
        long lo = deg_begin_[d], hi = deg_begin_[d + 1];
        std::vector<std::pair<long, long>> cands;
        std::map<std::pair<long, long>, long> cand_idx;
        for (long b = lo; b < hi; ++b)
            for (long a = 0; a < (long)pres_.arrows.size(); ++a)
                if (pres_.arrows[a].src == basis_[b].dst) {
                    cand_idx[{b, a}] = (long)cands.size();
                    cands.push_back({b, a});
                }
        if (cands.empty()) break;

        // relation images landing in degree d+1
        std::vector<std::vector<long>> relrows;
        for (const auto& r : pres_.relations) {
            long e = (long)r.terms[0].word.size();
            if (e > d + 1) continue;
            long relsrc = pres_.arrows[r.terms[0].word.front()].src;
            long blo = deg_begin_[d + 1 - e], bhi = deg_begin_[d + 2 - e];
            for (long b = blo; b < bhi; ++b) {
                if (basis_[b].dst != relsrc) continue;
                std::vector<long> row(cands.size(), 0);
                bool nonzero = false;
                for (const auto& t : r.terms) {
                    SparseVec cur;
                    cur[b] = k_.scalar(t.coef);
                    for (long step = 0; step < e - 1; ++step)
                        cur = mul_arrow(cur, t.word[step]);
                    long last = t.word[e - 1];
                    for (const auto& [bi, c] : cur) {
                        auto it = cand_idx.find({bi, last});
                        if (it == cand_idx.end())
                            throw std::logic_error("relation expansion left candidate space");
                        row[it->second] = k_.add(row[it->second], c);
                        if (row[it->second] != 0) nonzero = true;
                    }
                }
                if (nonzero) relrows.push_back(std::move(row));
            }
        }

        Echelon E = echelonize(k_, std::move(relrows), mode);
        std::vector<char> is_piv(cands.size(), 0);
        for (long c : E.pivot_cols) is_piv[c] = 1;

        // new basis: non-pivot candidates, in candidate order
        std::vector<long> cand_to_basis(cands.size(), -1);
        long new_lo = (long)basis_.size();
        for (size_t c = 0; c < cands.size(); ++c) {
            if (is_piv[c]) continue;
            auto [b, a] = cands[c];
            BasisElt be;
            be.deg = d + 1;
            be.src = basis_[b].src;
            be.dst = pres_.arrows[a].dst;
            be.word = basis_[b].word;
            be.word.push_back(a);
            cand_to_basis[c] = (long)basis_.size();
            basis_.push_back(std::move(be));
        }
        rmul_.resize(basis_.size());
        // reduction of each candidate into the new basis
        std::vector<SparseVec> cand_red(cands.size());
        for (size_t c = 0; c < cands.size(); ++c)
            if (!is_piv[c]) cand_red[c][cand_to_basis[c]] = 1;
        for (size_t i = 0; i < E.rows.size(); ++i) {
            long pc = E.pivot_cols[i];
            SparseVec red;
            for (size_t j = 0; j < cands.size(); ++j) {
                if ((long)j == pc || E.rows[i][j] == 0) continue;
                red[cand_to_basis[j]] = k_.neg(E.rows[i][j]); // non-pivot cols only
            }
            cand_red[pc] = std::move(red);
        }
        for (size_t c = 0; c < cands.size(); ++c) {
            auto [b, a] = cands[c];
            rmul_[b][a] = std::move(cand_red[c]);
        }
        if (d == 0)
            for (long a = 0; a < (long)pres_.arrows.size(); ++a) {
                const auto& red = rmul_[pres_.arrows[a].src][a];
                if (red.size() == 1) arrow_basis_id_[a] = red.begin()->first;
            }

        deg_begin_.push_back((long)basis_.size());
        if ((long)basis_.size() == new_lo) break; // degree vanished
        ++d;
        if (d >= pres_.grading_cap)
            throw std::logic_error("graded_quotient: algebra not visibly nilpotent "
                                   "(grading cap reached with nonzero top degree)");
    }
}

SparseVec GradedAlgebra::mul_arrow(const SparseVec& x, long arrow) const {
    SparseVec out;
    long asrc = pres_.arrows[arrow].src;
    for (const auto& [b, c] : x) {
        if (basis_[b].dst != asrc || c == 0) continue;
        auto it = rmul_[b].find(arrow);
        if (it == rmul_[b].end()) continue; // degree above the vanishing point
        for (const auto& [b2, c2] : it->second) {
            long& slot = out[b2];
            slot = k_.add(slot, k_.mul(c, c2));
            if (slot == 0) out.erase(b2);
        }
    }
    return out;
}

SparseVec GradedAlgebra::scale(const SparseVec& x, long c) const {
    SparseVec out;
    if (c == 0) return out;
    for (const auto& [b, v] : x) out[b] = k_.mul(v, c);
    return out;
}

SparseVec GradedAlgebra::add(const SparseVec& x, const SparseVec& y) const {
    SparseVec out = x;
    for (const auto& [b, v] : y) {
        long& slot = out[b];
        slot = k_.add(slot, v);
        if (slot == 0) out.erase(b);
    }
    return out;
}

SparseVec GradedAlgebra::mul(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [by, cy] : y) {
        const BasisElt& be = basis_[by];
        SparseVec cur;
        if (be.deg == 0) {
            for (const auto& [bx, cx] : x)
                if (basis_[bx].dst == be.src) cur[bx] = k_.mul(cx, cy);
        } else {
            for (const auto& [bx, cx] : x)
                if (basis_[bx].dst == be.src) cur[bx] = k_.mul(cx, cy);
            for (long a : be.word) cur = mul_arrow(cur, a);
        }
        out = add(out, cur);
    }
    return out;
}

SparseVec GradedAlgebra::word_elt(const std::vector<long>& word) const {
    if (word.empty()) throw std::logic_error("word_elt: empty word");
    SparseVec cur;
    cur[pres_.arrows[word[0]].src] = 1;
    for (long a : word) cur = mul_arrow(cur, a);
    return cur;
}

SparseVec GradedAlgebra::eval_relation(const Relation& r) const {
    SparseVec acc;
    for (const auto& t : r.terms)
        acc = add(acc, scale(word_elt(t.word), k_.scalar(t.coef)));
    return acc;
}

std::vector<std::vector<long>> GradedAlgebra::cartan() const {
    std::vector<std::vector<long>> C(pres_.nverts, std::vector<long>(pres_.nverts, 0));
    for (const auto& b : basis_) C[b.src][b.dst]++;
    return C;
}

std::vector<SparseVec> GradedAlgebra::center_basis(long block) const {
    // unknowns: loop basis elements of the block
    std::vector<long> loops;
    for (size_t b = 0; b < basis_.size(); ++b)
        if (basis_[b].src == basis_[b].dst &&
            (block < 0 || pres_.block_of_vertex[basis_[b].src] == block))
            loops.push_back((long)b);
    std::vector<long> block_arrows;
    for (size_t a = 0; a < pres_.arrows.size(); ++a)
        if (block < 0 || pres_.block_of_vertex[pres_.arrows[a].src] == block)
            block_arrows.push_back((long)a);

    // constraint row per unknown: concat over arrows of coords(u*a - a*u)
    const long dim = (long)basis_.size();
    std::vector<std::vector<long>> cols; // transposed: one row per coordinate
    std::vector<std::vector<long>> per_unknown(loops.size());
    for (size_t u = 0; u < loops.size(); ++u) {
        std::vector<long> row;
        row.reserve(block_arrows.size() * 4);
        SparseVec uvec;
        uvec[loops[u]] = 1;
        std::vector<long> dense(dim * (long)block_arrows.size(), 0);
        for (size_t ai = 0; ai < block_arrows.size(); ++ai) {
            long a = block_arrows[ai];
            SparseVec ua = mul_arrow(uvec, a);
            SparseVec avec;
            avec[arrow_basis_id_[a]] = 1;
            SparseVec au = mul(avec, uvec);
            for (const auto& [b, c] : ua) dense[ai * dim + b] = k_.add(dense[ai * dim + b], c);
            for (const auto& [b, c] : au) dense[ai * dim + b] = k_.sub(dense[ai * dim + b], c);
        }
        per_unknown[u] = std::move(dense);
    }
    auto kb = kernel_basis_over_unknowns(per_unknown);
    std::vector<SparseVec> out;
    for (const auto& v : kb) {
        SparseVec z;
        for (size_t u = 0; u < loops.size(); ++u)
            if (v[u] != 0) z[loops[u]] = v[u];
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<std::vector<long>>
GradedAlgebra::kernel_basis_over_unknowns(const std::vector<std::vector<long>>& per_unknown) const {
    // left kernel of the unknowns x coords matrix = right kernel of transpose
    if (per_unknown.empty()) return {};
    size_t ncoords = per_unknown[0].size();
    std::vector<std::vector<long>> tr;
    for (size_t c = 0; c < ncoords; ++c) {
        std::vector<long> row(per_unknown.size(), 0);
        bool nz = false;
        for (size_t u = 0; u < per_unknown.size(); ++u) {
            row[u] = per_unknown[u][c];
            nz = nz || row[u] != 0;
        }
        if (nz) tr.push_back(std::move(row));
    }
    return kernel_basis(k_, tr, (long)per_unknown.size());
}

long digit_cartan(long p, long f, long i, long j) {
    long n = 1;
    for (long t = 0; t < f; ++t) n *= p;
    n -= 1;
    if (n == 0) n = 1;
    long target = (((i - j) % n) + n) % n;
    long count = (i % n + n) % n == (j % n + n) % n ? 1 : 0; // identity contribution
    long total = 1;
    for (long t = 0; t < f; ++t) total *= p;
    for (long code = 1; code < total; ++code) {
        long c = code, sum = 0, pw = 1;
        for (long t = 0; t < f; ++t) {
            sum = (sum + 2 * (c % p) % n * pw) % n;
            c /= p;
            pw = (pw * p) % n;
        }
        if (sum % n == target) ++count;
    }
    return count;
}

OmegaBasis omega_basis(const GradedAlgebra& A, long I_mask) {
    const Presentation& P = A.pres();
    if (P.kind != "koshita") throw std::domain_error("omega_basis needs a koshita presentation");
    long f = P.f;
    auto inI = [&](long mask, long i) { return (mask >> (((i % f) + f) % f)) & 1; };
    auto tog = [&](long mask, long i) { return mask ^ (1L << (((i % f) + f) % f)); };

    OmegaBasis ob;
    ob.f = f;
    ob.subset = I_mask;

    // omega_{i,I} word for i not in I, by the j(i,I) descent rule
    auto omega_word = [&](long i, long I) {
        long j = i;
        while (true) {
            bool ok = !inI(I, j - 1);
            for (long l = j; l < i; ++l) ok = ok && inI(I, l);
            if (ok) break;
            --j;
            if (j < i - f) throw std::logic_error("omega j(i,I) rule failed");
        }
        std::vector<long> word;
        long cur = I;
        for (long m = j; m <= i; ++m) { // ascend, toggling j..i
            long a = P.arrow_at(cur, ((m % f) + f) % f);
            if (a < 0) throw std::logic_error("omega word leaves the quiver");
            word.push_back(a);
            cur = tog(cur, m);
        }
        for (long m = i; m >= j; --m) { // descend, toggling i..j
            long a = P.arrow_at(cur, ((m % f) + f) % f);
            if (a < 0) throw std::logic_error("omega word leaves the quiver");
            word.push_back(a);
            cur = tog(cur, m);
        }
        if (cur != I) throw std::logic_error("omega word is not a loop");
        return word;
    };

    std::vector<long> rest;
    for (long i = 0; i < f; ++i)
        if (!inI(I_mask, i)) rest.push_back(i);

    std::vector<SparseVec> vecs;
    for (long T = 0; T < (1L << rest.size()); ++T) {
        SparseVec prod;
        prod[A.vertex_elt(I_mask)] = 1;
        std::vector<long> word;
        for (size_t t = 0; t < rest.size(); ++t)
            if (T & (1L << t)) {
                auto w = omega_word(rest[t], I_mask);
                word.insert(word.end(), w.begin(), w.end());
                for (long a : w) prod = A.mul_arrow(prod, a);
            }
        ob.T_sets.push_back(T);
        ob.words.push_back(word);
        vecs.push_back(std::move(prod));
    }
    // independence inside the graded algebra
    std::vector<std::vector<long>> rows;
    for (const auto& v : vecs) {
        std::vector<long> row(A.total_dim(), 0);
        for (const auto& [b, c] : v) row[b] = c;
        rows.push_back(std::move(row));
    }
    ob.independent = rank_of(A.field(), rows) == (long)vecs.size();
    return ob;
}

PsiTwist psi_twist_map(const GradedAlgebra& A, const std::vector<SparseVec>& z) {
    const Presentation& P = A.pres();
    if (P.kind != "delta") throw std::domain_error("psi_twist needs a delta presentation");
    if ((long)z.size() != P.f) throw std::domain_error("psi_twist: need f central units");
    // unit check: the degree-0 part of each z_q must be nonzero on every vertex
    for (const auto& zq : z) {
        std::vector<char> seen(P.nverts, 0);
        for (const auto& [b, c] : zq)
            if (A.basis()[b].deg == 0 && c != 0) seen[A.basis()[b].src] = 1;
        for (long v = 0; v < P.nverts; ++v)
            if (!seen[v]) throw std::domain_error("psi_twist: z_q is not a unit");
    }
    PsiTwist psi;
    psi.image_of_basis.resize(A.total_dim());
    for (long b = 0; b < A.total_dim(); ++b) {
        const auto& be = A.basis()[b];
        SparseVec cur;
        cur[A.vertex_elt(be.src)] = 1;
        for (long a : be.word) {
            // psi(arrow) = z_cls * arrow
            SparseVec av;
            av[A.arrow_elt(a)] = 1;
            SparseVec za = A.mul(z[P.arrows[a].cls], av);
            cur = A.mul(cur, za);
        }
        psi.image_of_basis[b] = std::move(cur);
    }
    return psi;
}

namespace {
SparseVec apply_psi(const GradedAlgebra& A, const PsiTwist& psi, const SparseVec& x) {
    SparseVec out;
    for (const auto& [b, c] : x)
        out = A.add(out, A.scale(psi.image_of_basis[b], c));
    return out;
}
} // namespace

Report psi_twist_report(const GradedAlgebra& A, const std::vector<SparseVec>& z,
                        const std::vector<SparseVec>& zprime) {
    Report rep;
    rep.suite = "psi_twist";
    const Presentation& P = A.pres();
    PsiTwist psi = psi_twist_map(A, z);
    // relation preservation: psi applied to each relation word stays zero
    bool all_rel = true;
    for (const auto& r : P.relations) {
        SparseVec acc;
        for (const auto& t : r.terms) {
            SparseVec cur;
            cur[A.vertex_elt(P.arrows[t.word[0]].src)] = A.field().scalar(t.coef);
            for (long a : t.word) {
                SparseVec av;
                av[A.arrow_elt(a)] = 1;
                cur = A.mul(cur, A.mul(z[P.arrows[a].cls], av));
            }
            acc = A.add(acc, cur);
        }
        if (!acc.empty()) {
            all_rel = false;
            rep.add("relation." + r.label, false);
        }
    }
    rep.add("relations_preserved", all_rel, {{"count", P.relations.size()}});

    // composition law psi(z) o psi(z') = psi(z z')
    PsiTwist psi2 = psi_twist_map(A, zprime);
    std::vector<SparseVec> zz(P.f);
    for (long q = 0; q < P.f; ++q) zz[q] = A.mul(z[q], zprime[q]);
    PsiTwist psi12 = psi_twist_map(A, zz);
    bool comp = true;
    for (long b = 0; b < A.total_dim(); ++b) {
        SparseVec lhs = apply_psi(A, psi, psi2.image_of_basis[b]);
        if (!(lhs == psi12.image_of_basis[b])) { comp = false; break; }
    }
    rep.add("composition", comp);
    return rep;
}

} // namespace ordlift

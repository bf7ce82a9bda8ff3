#pragma once

#include "ordlift/quad.hpp"
#include "ordlift/rat.hpp"
#include "ordlift/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordlift {

/// One Wedderburn component: n x n matrices over K (deg 1) or over the
/// ramified quadratic extension K(pi), pi^2 = d p (deg 2).
struct AmbientBlock {
    long n = 1;
    bool quad = false;
    Rat d = 0; // only meaningful when quad
    long deg() const { return quad ? 2 : 1; }
};

/// A split-enough semisimple K-algebra in block form. Coordinates are
/// block-major, entries row-major, quadratic entries as (rational, pi) parts.
struct Ambient {
    long p = 2;
    std::vector<AmbientBlock> blocks;

    long dim() const {
        long D = 0;
        for (const auto& b : blocks) D += b.n * b.n * b.deg();
        return D;
    }
    long block_offset(long blk) const {
        long off = 0;
        for (long i = 0; i < blk; ++i) off += blocks[i].n * blocks[i].n * blocks[i].deg();
        return off;
    }
    long coord(long blk, long i, long j, long part = 0) const {
        const auto& b = blocks[blk];
        return block_offset(blk) + (i * b.n + j) * b.deg() + part;
    }
};

/// Element of an Ambient, as a flat rational coordinate vector.
struct AlgElem {
    const Ambient* amb = nullptr;
    std::vector<Rat> v;

    explicit AlgElem(const Ambient& a) : amb(&a), v(a.dim(), 0) {}
    bool is_zero() const {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
};

AlgElem alg_one(const Ambient& A);
AlgElem alg_add(const AlgElem& x, const AlgElem& y);
AlgElem alg_sub(const AlgElem& x, const AlgElem& y);
AlgElem alg_scale(const AlgElem& x, const Rat& c);
AlgElem alg_mul(const AlgElem& x, const AlgElem& y);

/// Central symmetrizing element: one scalar per block (pi part only used
/// for quadratic centers).
struct SymmElem {
    std::vector<std::pair<Rat, Rat>> u;
};

// T_u(a) (linear) and T_u(a, b) = T_u(a b)
Rat trace_form_lin(const Ambient& A, const SymmElem& u, const AlgElem& a);
Rat trace_form(const Ambient& A, const SymmElem& u, const AlgElem& a, const AlgElem& b);

/// Full-rank lattice in a D-dimensional coordinate space, stored in
/// canonical p-local Hermite normal form: square upper-triangular basis,
/// pivot entries exact powers of p, entries above a pivot reduced to the
/// canonical residue modulo that pivot. Lattice equality is row equality.
struct Lattice {
    long p = 2;
    long D = 0;
    std::vector<std::vector<Rat>> rows;

    bool operator==(const Lattice& o) const { return p == o.p && rows == o.rows; }
};

Lattice hnf(long p, long D, std::vector<std::vector<Rat>> gens);
Lattice lat_scale(const Lattice& L, const Rat& c);
Lattice lat_sum(const Lattice& a, const Lattice& b);
Lattice lat_intersect(const Lattice& a, const Lattice& b);
Lattice lat_dual_std(const Lattice& L); // w.r.t. the standard pairing sum x_i y_i
bool lat_contains(const Lattice& L, const std::vector<Rat>& v);
long vdet(const Lattice& L); // v_p of the basis determinant
Rat idx(const Lattice& L1, const Lattice& L2); // normalized index, idx(L, pL) = 1

// dual of M inside the space of L-coordinates under an explicit pairing
// matrix G (G[a][b] pairs coordinate a of the result space with coordinate
// b of M's space): { x : x G B_M^T integral }
Lattice lat_dual_pairing(long p, const std::vector<std::vector<Rat>>& G, const Lattice& M);

/// An order presented by idempotent-indexed pieces. Idempotents are sums
/// of diagonal matrix units in standard position, one position list per
/// index; piece (i,j) is a lattice in the corner e_i A e_j.
struct BlockOrder {
    Ambient amb;
    long kappa = 0;
    // idem[l] = list of (block, diagonal position)
    std::vector<std::vector<std::pair<long, long>>> idem;
    std::map<std::pair<long, long>, Lattice> pieces;

    // corner coordinate descriptors: list of (block, pos_i, pos_j)
    std::vector<std::tuple<long, long, long>> corner_coords(long i, long j) const;
    long corner_dim(long i, long j) const;
    AlgElem embed(long i, long j, const std::vector<Rat>& cv) const;
    std::vector<Rat> project(long i, long j, const AlgElem& x) const;
    AlgElem idem_elem(long l) const;

    Lattice assemble() const; // the full lattice, canonical HNF
};

Report is_order(const BlockOrder& O);
Report is_selfdual(const BlockOrder& O, const SymmElem& u);

struct DecompMatrix {
    std::vector<std::string> row_labels; // per ambient block
    std::vector<std::string> col_labels; // per idempotent
    std::vector<std::vector<long>> entries;
};

DecompMatrix decomposition_matrix(const BlockOrder& O);

// lattice product of pieces: span of pairwise products, projected to (i,l)
std::vector<std::vector<Rat>> piece_product_rows(const BlockOrder& O, long i, long j, long l);
Lattice piece_product(const BlockOrder& O, long i, long j, long l);

} // namespace ordlift

#pragma once

#include "ordlift/lattice.hpp"
#include "ordlift/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace ordlift {

enum class LiftVariant { Char2, Split, Nonsplit };

/// Parameters of the unique-lifting construction for a block of
/// O Delta_2(p^f): the variant of the K-span, the symmetrizing element u
/// (p-valuation -f in each component), and the extension data.
struct LiftParams {
    long p = 2, f = 1;
    LiftVariant variant = LiftVariant::Char2;
    Rat c = 1;  // split: u_{kappa+1} / u_{kappa+2}
    Rat d = -1; // nonsplit: pi^2 = d p
    SymmElem u;

    long kappa() const {
        long q = 1;
        for (long i = 0; i < f; ++i) q *= p;
        return p == 2 ? q - 1 : (q - 1) / 2;
    }
    long degt() const { return variant == LiftVariant::Char2 ? 1 : 2; } // [Ktilde : K]
    void validate() const;
};

/// Group-theoretic default u (character degrees over the group order).
LiftParams default_lift_params(long p, long f, const Rat& c = 1, const Rat& d = -1);

Ambient lift_ambient(const LiftParams& P);
BlockOrder lift_skeleton(const LiftParams& P); // ambient + idempotents, no pieces

/// The diagonal corner e_i Lambda e_i, in corner coordinates
/// (line entry, then the Ktilde entry parts).
Lattice diagonal_piece(const LiftParams& P);

/// Scalar of the commutative Ktilde: a pair of components (split) or
/// a + b pi (nonsplit); b unused for Char2.
struct KtScalar {
    Rat a = 0, b = 0;
};

struct MTable {
    long p = 0, f = 0, kappa = 0, degt = 1;
    // m[(i,q)]: stored doubled for the rank-2 cases, so that the duality
    // pairing reads m(i->j) + m(j->i) = f in all variants
    std::map<std::pair<long, long>, long> m;
    std::vector<long> a; // a_q, un-doubled; all 1

    long sum_over_i(long q) const;
    bool exchange_holds() const;
    // m(i->j): sum of arrow values along the increasing-q digit path
    long path_value(long i, long j) const;
};

MTable m_table(const LiftParams& P);

/// Doubled piece indices m(i->j) = idx(Dtil, piece(i,j)) * [Ktilde:K] read
/// off a constructed order. These satisfy m(i->j) + m(j->i) = f on every
/// self-dual standard lift; they agree with MTable::path_value whenever the
/// digit expansion of j-i is the unique one (always for p = 2 and f = 1).
std::map<std::pair<long, long>, long> piece_m_values(const BlockOrder& O, const LiftParams& P);

/// The standard-form self-dual lift: diagonal pieces, normalized [0]-arrow
/// pieces, the exceptional piece from the duality formula, everything else
/// by the p-fold recursion and digit factorizations.
BlockOrder standard_lift(const LiftParams& P);

/// Conjugates an order with standard idempotents back to standard form
/// (all non-exceptional [0]-arrow pieces principal and equal to the
/// projected diagonal).
BlockOrder normalize_order(const BlockOrder& O, const LiftParams& P);

Report verify_lift(const BlockOrder& O, const LiftParams& P);

// ground-truth anchors built from group elements and character idempotents
BlockOrder group_ring_block_z2c2();
BlockOrder group_ring_block_z3c6();

// internals exposed for tests: x-scalars of all pieces of the standard lift
std::map<std::pair<long, long>, KtScalar> standard_lift_scalars(const LiftParams& P);
long kt_vbar(const LiftParams& P, const KtScalar& x);
KtScalar kt_one(const LiftParams& P);
KtScalar kt_mul(const LiftParams& P, const KtScalar& x, const KtScalar& y);
KtScalar kt_inv(const LiftParams& P, const KtScalar& x);
bool kt_eq(const KtScalar& x, const KtScalar& y);
Lattice kt_scale_lattice(const LiftParams& P, const Lattice& L, const KtScalar& x);

} // namespace ordlift

#pragma once

#include "ordlift/field.hpp"
#include "ordlift/quiver.hpp"
#include "ordlift/report.hpp"

#include <vector>

namespace ordlift {

/// Delta_2(p^f) as pairs (a, b) with a in F_{p^f}^x, b in F_{p^f},
/// modelling the upper triangular matrices [[a, b], [0, a^-1]].
class DeltaGroup {
public:
    DeltaGroup(long p, long f);

    const Field& field() const { return F_; }
    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; }
    long order() const { return n_; } // q (q-1)

    long id_of(long a, long b) const { return (F_.dlog(a)) * q_ + b; }
    std::pair<long, long> elem(long id) const { return {F_.exp(id / q_), id % q_}; }
    long identity() const { return id_of(1, 0); }
    long mul(long g, long h) const;
    long inv(long g) const;

private:
    Field F_;
    long p_, f_, q_, n_;
};

/// Element of k G over k = F_{p^f}: dense coefficient vector on group ids.
struct GroupAlgElem {
    const DeltaGroup* G = nullptr;
    std::vector<long> c; // field codes, length |G|

    explicit GroupAlgElem(const DeltaGroup& g) : G(&g), c(g.order(), 0) {}
    bool is_zero() const;
    long support_size() const;
};

GroupAlgElem ga_add(const GroupAlgElem& x, const GroupAlgElem& y);
GroupAlgElem ga_sub(const GroupAlgElem& x, const GroupAlgElem& y);
GroupAlgElem ga_scale(const GroupAlgElem& x, long code);
GroupAlgElem ga_mul(const GroupAlgElem& x, const GroupAlgElem& y);
GroupAlgElem ga_one(const DeltaGroup& G);
bool ga_eq(const GroupAlgElem& x, const GroupAlgElem& y);

/// Primitive idempotents e_chi of kA <= kG, indexed by characters
/// chi_i(a) = a^i, i in Z/(p^f - 1).
std::vector<GroupAlgElem> char_idempotents(const DeltaGroup& G);

struct RadicalVec {
    GroupAlgElem v;
    long weight;  // character index of the conjugation action a . t = a t a^-1
    bool marked;  // part of the chosen minimal generating set
};

/// Simultaneous eigenbasis of A acting on Jac(kP) by conjugation, with a
/// marked f-element subset whose images span Jac/Jac^2. Eigenvectors are
/// normalized (first nonzero coefficient 1) and within an eigenspace are
/// ordered by support size, then lexicographically by coefficient vector.
std::vector<RadicalVec> radical_eigenbasis(const DeltaGroup& G);

struct XSet {
    long modulus;
    std::vector<long> residues; // multiset, sorted
};

XSet x_set(const DeltaGroup& G);

std::vector<std::vector<long>> cartan_from_group(const DeltaGroup& G);

long class_count(const DeltaGroup& G);

/// Checks that the delta presentation maps isomorphically onto kG:
/// vertices to character idempotents, arrows to e_chi * s_psi, all
/// relations hold, and the images of a quotient basis span kG.
Report verify_group_quiver_iso(const DeltaGroup& G, const Presentation& P,
                               const GradedAlgebra* A = nullptr);

} // namespace ordlift

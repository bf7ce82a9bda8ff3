#pragma once

#include "ordlift/elim.hpp"
#include "ordlift/field.hpp"
#include "ordlift/report.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace ordlift {

struct Arrow {
    long src, dst; // vertex indices; an arrow is an element of e_src A e_dst
    std::string label;
    long cls; // arrow class q (delta) or toggled index i (koshita)
};

// one summand of a relation: coef * (word of composable arrows, left to right)
struct RelTerm {
    long coef; // in [0, p), interpreted in F_p < F_{p^f}
    std::vector<long> word;
};

struct Relation {
    std::vector<RelTerm> terms;
    std::string label;
};

/// A quiver with length-homogeneous relations.
struct Presentation {
    long p = 0, f = 0;
    long nverts = 0;
    std::vector<std::string> vlabels;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::vector<long> block_of_vertex; // parity blocks for odd p, all 0 otherwise
    long grading_cap = 0;
    std::string kind; // "delta" or "koshita"

    void validate() const; // homogeneity + composability, throws on violation
    long arrow_at(long src, long cls) const; // -1 if absent
};

/// The Ext-quiver presentation of k Delta_2(p^f): vertices Z/(p^f-1),
/// arrows s_{i,q}: i -> i + 2 p^q, commutation and p-th power relations.
Presentation delta_presentation(long p, long f);

/// Koshita's presentation of the basic algebra of k SL_2(2^f):
/// vertices are subsets of Z/f (encoded as bitmasks = vertex index),
/// arrows alpha_{i,I} in e_I A e_{I+{i}} whenever i-1 is not in I.
/// Supported for f >= 2.
Presentation koshita_presentation(long f);

using SparseVec = std::map<long, long>; // basis index -> field code

/// Degreewise basis of kQ/I with composition data, built by exact
/// elimination per degree (valid because all relations are homogeneous).
class GradedAlgebra {
public:
    struct BasisElt {
        long deg, src, dst;
        std::vector<long> word; // arrow indices, composable left to right
    };

    GradedAlgebra(Presentation pres, ElimMode mode = ElimMode::Auto);

    const Presentation& pres() const { return pres_; }
    const Field& field() const { return k_; }
    long total_dim() const { return (long)basis_.size(); }
    long max_degree() const {
        long m = 0;
        for (const auto& b : basis_) m = std::max(m, b.deg);
        return m;
    }
    const std::vector<BasisElt>& basis() const { return basis_; }
    long degree_dim(long d) const;
    long vertex_elt(long v) const { return v; } // degree-0 basis ids are the vertices
    long arrow_elt(long a) const;               // basis id of an arrow

    // right-multiply an element by an arrow
    SparseVec mul_arrow(const SparseVec& x, long arrow) const;
    // product of two general elements
    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
    SparseVec word_elt(const std::vector<long>& word) const; // reduce a path word
    SparseVec scale(const SparseVec& x, long c) const;
    SparseVec add(const SparseVec& x, const SparseVec& y) const;

    // evaluate a relation (must be zero in the quotient by construction;
    // used for cross-checks on externally built maps)
    SparseVec eval_relation(const Relation& r) const;

    std::vector<std::vector<long>> cartan() const; // nverts x nverts integer matrix

    // center of the parity block (block = -1: whole algebra): returns a basis
    std::vector<SparseVec> center_basis(long block) const;
    long center_dim(long block) const { return (long)center_basis(block).size(); }

private:
    Presentation pres_;
    Field k_;
    std::vector<BasisElt> basis_;
    std::vector<long> deg_begin_; // basis index ranges per degree
    std::vector<long> arrow_basis_id_;
    // rmul_[b] maps arrow -> reduction of (basis b) * arrow
    std::vector<std::map<long, SparseVec>> rmul_;

    void build(ElimMode mode);
    std::vector<std::vector<long>>
    kernel_basis_over_unknowns(const std::vector<std::vector<long>>& per_unknown) const;
};

/// dim e_i A e_j predicted by the digit-counting argument:
/// delta_{ij} + #{(n_0..n_{f-1}) in {0..p-1}^f \ {0} : 2 sum n_q p^q = i-j mod p^f-1}
long digit_cartan(long p, long f, long i, long j);

struct OmegaBasis {
    long f = 0;
    long subset = 0;                          // I as bitmask
    std::vector<std::vector<long>> words;     // omega_{I,T} words (arrow indices), T ascending by bitmask
    std::vector<long> T_sets;
    bool independent = false;
};

/// Koshita's omega-basis of the diagonal corner e_I A e_I; asserts linear
/// independence inside the graded quotient.
OmegaBasis omega_basis(const GradedAlgebra& A, long I_mask);

/// The twist s_{i,q} -> z_q * s_{i,q} on a delta graded algebra.
struct PsiTwist {
    std::vector<SparseVec> image_of_basis; // linear map in basis coordinates
};

PsiTwist psi_twist_map(const GradedAlgebra& A, const std::vector<SparseVec>& z);
Report psi_twist_report(const GradedAlgebra& A, const std::vector<SparseVec>& z,
                        const std::vector<SparseVec>& zprime);

} // namespace ordlift

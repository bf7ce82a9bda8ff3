#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace ordlift {

/// F_{p^f} with deterministically chosen modulus and generator.
///
/// Elements are encoded as integers in [0, p^f): the element
/// c_0 + c_1 x + ... + c_{f-1} x^{f-1} has code sum c_i p^i.
/// Multiplication goes through log/exp tables for the chosen generator,
/// addition is digitwise mod p.
class Field {
public:
    Field(long p, long f);

    long p() const { return p_; }
    long f() const { return f_; }
    long q() const { return q_; } // p^f
    long order() const { return q_ - 1; } // multiplicative order

    // modulus coefficients c_0..c_f (monic, c_f = 1)
    const std::vector<long>& modulus() const { return modulus_; }
    long generator() const { return gen_; }

    long add(long a, long b) const;
    long neg(long a) const;
    long sub(long a, long b) const { return add(a, neg(b)); }
    long mul(long a, long b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % order()];
    }
    long inv(long a) const {
        if (a == 0) throw std::domain_error("field inverse of zero");
        return exp_[(order() - log_[a]) % order()];
    }
    long pow(long a, long e) const;
    // discrete log w.r.t. the canonical generator; error on zero
    long dlog(long a) const {
        if (a == 0) throw std::domain_error("dlog of zero");
        return log_[a];
    }
    long exp(long k) const { return exp_[((k % order()) + order()) % order()]; }

    // embed a prime-field scalar c in [0,p)
    long scalar(long c) const { return ((c % p_) + p_) % p_; }

private:
    long p_, f_, q_;
    long gen_ = 0;
    std::vector<long> modulus_;     // length f+1
    std::vector<long> exp_;         // exp_[k] = gen^k, k in [0, q-1)
    std::vector<long> log_;         // log_[a] for a != 0

    long poly_mul_mod(long a, long b) const; // schoolbook mod modulus
};

/// Element of a Field; a thin value type carrying its field pointer.
struct FieldElem {
    const Field* F = nullptr;
    long v = 0;

    FieldElem() = default;
    FieldElem(const Field& fld, long code) : F(&fld), v(code) {}

    bool is_zero() const { return v == 0; }
    friend FieldElem operator+(FieldElem a, FieldElem b) { return {*a.F, a.F->add(a.v, b.v)}; }
    friend FieldElem operator-(FieldElem a, FieldElem b) { return {*a.F, a.F->sub(a.v, b.v)}; }
    friend FieldElem operator*(FieldElem a, FieldElem b) { return {*a.F, a.F->mul(a.v, b.v)}; }
    friend FieldElem operator-(FieldElem a) { return {*a.F, a.F->neg(a.v)}; }
    friend bool operator==(FieldElem a, FieldElem b) { return a.v == b.v; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.v != b.v; }
    FieldElem inverse() const { return {*F, F->inv(v)}; }
};

/// Canonical residue index in Z/(p^f - 1).
struct CharIdx {
    long modulus; // p^f - 1
    long r;       // representative in [0, modulus)

    CharIdx(long mod, long val) : modulus(mod), r(((val % mod) + mod) % mod) {
        if (mod <= 0) throw std::domain_error("CharIdx modulus must be positive");
    }
    friend CharIdx operator+(CharIdx a, CharIdx b) { return {a.modulus, a.r + b.r}; }
    friend bool operator==(CharIdx a, CharIdx b) { return a.modulus == b.modulus && a.r == b.r; }
};

Field field_make(long p, long f);

// dlog of a nonzero field element as a CharIdx
inline CharIdx dlog(const FieldElem& x) {
    return CharIdx(x.F->order() == 0 ? 1 : x.F->order(), x.F->dlog(x.v));
}

} // namespace ordlift

#include "ordlift/field.hpp"

namespace ordlift {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// polynomial ops on coefficient vectors over F_p (lowest degree first)
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    long dm = (long)m.size() - 1;
    while ((long)a.size() > dm) {
        long lead = a.back();
        long da = (long)a.size() - 1;
        if (lead != 0) {
            // m is monic
            for (long i = 0; i <= dm; ++i) {
                long& c = a[da - dm + i];
                c = ((c - lead * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

std::vector<long> poly_mulmod(const std::vector<long>& a, const std::vector<long>& b,
                              const std::vector<long>& m, long p) {
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

bool poly_divides(const std::vector<long>& d, std::vector<long> a, long p) {
    // d monic; returns true iff d | a
    long dd = (long)d.size() - 1;
    while ((long)a.size() - 1 >= dd) {
        long lead = a.back();
        long da = (long)a.size() - 1;
        if (lead != 0)
            for (long i = 0; i <= dd; ++i) {
                long& c = a[da - dd + i];
                c = ((c - lead * d[i]) % p + p) % p;
            }
        a.pop_back();
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if ((long)a.size() - 1 < dd) break;
    }
    for (long c : a)
        if (c != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<long>& m, long p) {
    long f = (long)m.size() - 1;
    if (f == 1) return true;
    // trial division by all monic polynomials of degree 1..f/2
    for (long d = 1; 2 * d <= f; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<long> div(d + 1, 0);
            long c = code;
            for (long i = 0; i < d; ++i) { div[i] = c % p; c /= p; }
            div[d] = 1;
            if (poly_divides(div, m, p)) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(long p, long f) : p_(p), f_(f) {
    if (!is_prime(p)) throw std::domain_error("field_make: p is not prime");
    if (f < 1) throw std::domain_error("field_make: f must be >= 1");
    q_ = 1;
    for (long i = 0; i < f; ++i) {
        q_ *= p;
        if (q_ > (1L << 20)) throw std::domain_error("field_make: p^f exceeds 2^20");
    }

    // lexicographically least monic irreducible of degree f
    // (lex on (c_0, c_1, ..., c_{f-1}))
    modulus_.assign(f + 1, 0);
    modulus_[f] = 1;
    bool found = false;
    for (long code = 0; code < q_ && !found; ++code) {
        long c = code;
        for (long i = 0; i < f; ++i) { modulus_[i] = c % p; c /= p; }
        if (is_irreducible(modulus_, p)) found = true;
    }
    if (!found) throw std::logic_error("field_make: no irreducible polynomial found");

    long ord = q_ - 1;
    // factor the multiplicative order once
    std::vector<long> prime_factors;
    {
        long n = ord;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_factors.push_back(n);
    }
    auto elem_order_is_full = [&](long a) {
        if (a == 0) return false;
        // a has order q-1 iff a^((q-1)/r) != 1 for every prime r | q-1
        for (long r : prime_factors) {
            long e = ord / r;
            // repeated squaring in the polynomial model
            std::vector<long> base(f, 0), acc(1, 1);
            long t = a;
            for (long i = 0; i < f; ++i) { base[i] = t % p; t /= p; }
            long ee = e;
            std::vector<long> sq = base;
            while (ee > 0) {
                if (ee & 1) acc = poly_mulmod(acc, sq, modulus_, p);
                sq = poly_mulmod(sq, sq, modulus_, p);
                ee >>= 1;
            }
            long code = 0, mul = 1;
            for (size_t i = 0; i < acc.size(); ++i) { code += acc[i] * mul; mul *= p; }
            if (code == 1 && e > 0) return false;
        }
        return true;
    };

    gen_ = 0;
    if (ord == 1) {
        gen_ = 1; // F_2: the identity generates the trivial group
    } else {
        for (long a = 1; a < q_; ++a)
            if (elem_order_is_full(a)) { gen_ = a; break; }
    }
    if (gen_ == 0) throw std::logic_error("field_make: no primitive generator found");

    exp_.assign(ord, 0);
    log_.assign(q_, 0);
    long cur = 1;
    for (long k = 0; k < ord; ++k) {
        exp_[k] = cur;
        log_[cur] = k;
        cur = poly_mul_mod(cur, gen_);
    }
    if (cur != 1) throw std::logic_error("field_make: generator order mismatch");
}

long Field::poly_mul_mod(long a, long b) const {
    std::vector<long> pa(f_, 0), pb(f_, 0);
    long t = a;
    for (long i = 0; i < f_; ++i) { pa[i] = t % p_; t /= p_; }
    t = b;
    for (long i = 0; i < f_; ++i) { pb[i] = t % p_; t /= p_; }
    auto pc = poly_mulmod(pa, pb, modulus_, p_);
    long code = 0, mul = 1;
    for (size_t i = 0; i < pc.size(); ++i) { code += pc[i] * mul; mul *= p_; }
    return code;
}

long Field::add(long a, long b) const {
    long r = 0, mul = 1;
    for (long i = 0; i < f_; ++i) {
        long da = a % p_, db = b % p_;
        r += ((da + db) % p_) * mul;
        a /= p_; b /= p_; mul *= p_;
    }
    return r;
}

long Field::neg(long a) const {
    long r = 0, mul = 1;
    for (long i = 0; i < f_; ++i) {
        long da = a % p_;
        r += ((p_ - da) % p_) * mul;
        a /= p_; mul *= p_;
    }
    return r;
}

long Field::pow(long a, long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("0 to negative power");
        return 0;
    }
    long ord = order();
    long k = (log_[a] * (e % ord)) % ord;
    if (k < 0) k += ord;
    return exp_[k];
}

Field field_make(long p, long f) { return Field(p, f); }

} // namespace ordlift

#include "qlab/finite_field.hpp"

#include <map>
#include <mutex>
#include <string>

namespace qlab {

namespace {

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) > dm) {
        int lead = a.back();
        if (lead != 0) {
            int shift = static_cast<int>(a.size()) - 1 - dm;
            for (int i = 0; i <= dm; ++i) {
                a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p * p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

bool poly_is_zero(const Poly& a) {
    for (int c : a)
        if (c) return false;
    return true;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool is_irreducible(const Poly& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= dm; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0);
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<int>(t % p);
                t /= p;
            }
            div[d] = 1;
            // remainder of m by div
            Poly rem = m;
            while (static_cast<int>(rem.size()) >= static_cast<int>(div.size())) {
                int lead = rem.back();
                if (lead != 0) {
                    int shift = static_cast<int>(rem.size()) - static_cast<int>(div.size());
                    int linv = 1;
                    for (int x = 1; x < p; ++x)
                        if (x * div[d] % p == 1) linv = x;
                    int f = lead * linv % p;
                    for (size_t i = 0; i < div.size(); ++i)
                        rem[i + shift] = ((rem[i + shift] - f * div[i]) % p + p * p) % p;
                }
                rem.pop_back();
            }
            if (poly_is_zero(rem)) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime_power(long long q, int* p_out, int* m_out) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q || p <= q; ++p) {
        bool prime = p >= 2;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (q % p != 0) continue;
        long long t = q;
        int m = 0;
        while (t % p == 0) { t /= p; ++m; }
        if (t != 1) return false;
        if (p_out) *p_out = static_cast<int>(p);
        if (m_out) *m_out = m;
        return true;
    }
    return false;
}

Field Field::make(long long q) {
    int p = 0, m = 0;
    if (q > 64 || !is_prime_power(q, &p, &m))
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power <= 64");
    Field F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = static_cast<int>(q);
    if (m > 1) {
        // lexicographically least modulus: smallest index sum c_i p^i
        long long count = 1;
        for (int i = 0; i < m; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly cand(m + 1, 0);
            long long t = idx;
            for (int i = 0; i < m; ++i) {
                cand[i] = static_cast<int>(t % p);
                t /= p;
            }
            cand[m] = 1;
            if (is_irreducible(cand, p)) {
                F.modulus_.assign(cand.begin(), cand.end() - 1);
                break;
            }
        }
        if (F.modulus_.empty()) throw Error("no irreducible modulus found (internal)");
    }
    F.build_tables();
    if (q <= 16) F.check_axioms();
    return F;
}

void Field::build_tables() {
    int q = q_, p = p_, m = m_;
    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.resize(q);
    frob_.resize(q);
    trace_.resize(q);
    square_.assign(q, 0);

    auto decode = [&](int a) {
        Poly c(m);
        for (int i = 0; i < m; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        int a = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) a = a * p + (i < m ? c[i] : 0);
        return a;
    };
    Poly mod(m + 1, 0);
    for (int i = 0; i < m; ++i) mod[i] = m > 1 ? modulus_[i] : 0;
    mod[m] = 1;

    for (int a = 0; a < q; ++a) {
        Poly ca = decode(a);
        Poly cn(m);
        for (int i = 0; i < m; ++i) cn[i] = (p - ca[i]) % p;
        neg_[a] = static_cast<uint8_t>(encode(cn));
        for (int b = 0; b < q; ++b) {
            Poly cb = decode(b);
            Poly cs(m);
            for (int i = 0; i < m; ++i) cs[i] = (ca[i] + cb[i]) % p;
            add_[a * q + b] = static_cast<uint8_t>(encode(cs));
            Poly prod = m > 1 ? poly_mod(poly_mul(ca, cb, p), mod, p) : Poly{ca[0] * cb[0] % p};
            mul_[a * q + b] = static_cast<uint8_t>(encode(prod));
        }
    }
    inv_[0] = 0;
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
    for (int a = 0; a < q; ++a) {
        uint8_t f = static_cast<uint8_t>(a);
        for (int i = 1; i < p; ++i) f = mul_[f * q + a]; // a^p
        frob_[a] = f;
        square_[mul_[a * q + a]] = 1;
    }
    for (int a = 0; a < q; ++a) {
        uint8_t t = static_cast<uint8_t>(a), acc = static_cast<uint8_t>(a);
        for (int i = 1; i < m; ++i) {
            t = frob_[t];
            acc = add_[acc * q + t];
        }
        trace_[a] = acc;
        if (trace_[a] >= p) throw Error("trace left the prime field (internal)");
    }
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw DivisionByZero("field inverse of zero");
    return inv_[a];
}

uint8_t Field::pow(uint8_t a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    uint8_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

void Field::check_axioms() const {
    int q = q_;
    for (int a = 0; a < q; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a) throw Error("field identity axiom failed");
        if (a != 0 && mul(a, inv_[a]) != 1) throw Error("field inverse axiom failed");
        for (int b = 0; b < q; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                throw Error("field commutativity failed");
            for (int c = 0; c < q; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error("field associativity failed");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw Error("field distributivity failed");
            }
        }
    }
}

const Field& field_of(long long q) {
    static std::mutex mu;
    static std::map<long long, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Field::make(q)).first;
    return it->second;
}

} // namespace qlab

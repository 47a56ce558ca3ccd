#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lrcpir/errors.hpp"

namespace lrcpir {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a finite field, stored as a packed base-p coefficient
/// vector (the "value"). Elements are only comparable and combinable within
/// the field that created them.
class FieldElement {
  public:
    FieldElement() : field_(nullptr), value_(0) {}
    FieldElement(const Field* field, unsigned value) : field_(field), value_(value) {}

    const Field* field() const { return field_; }
    unsigned value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& o) const {
        return field_ == o.field_ && value_ == o.value_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    const Field* field_;
    unsigned value_;
};

/// Arithmetic in GF(p^m) with an explicit monic irreducible defining
/// polynomial. Values are packed base-p coefficient vectors; multiplication
/// and division go through log/antilog tables built over a designated
/// primitive element. Immutable after construction, safe to share.
class Field {
  public:
    /// Builds a field spec. `poly` lists the defining polynomial's
    /// coefficients from the x^m term down to the constant term; it must be
    /// monic of degree m and irreducible over GF(p). Supported size:
    /// p^m <= 2^16. If `primitive` is given it must have multiplicative
    /// order p^m - 1, otherwise the smallest primitive element is chosen
    /// (preferring the class of x itself).
    static FieldPtr make(unsigned p, unsigned m, const std::vector<unsigned>& poly,
                         std::optional<unsigned> primitive = std::nullopt) {
        return FieldPtr(new Field(p, m, poly, primitive));
    }

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    unsigned size() const { return q_; }

    /// Defining polynomial coefficients, x^m term first.
    const std::vector<unsigned>& poly() const { return poly_; }

    FieldElement zero() const { return FieldElement(this, 0); }
    FieldElement one() const { return FieldElement(this, 1); }
    FieldElement primitive_element() const { return FieldElement(this, primitive_); }

    FieldElement element(unsigned value) const {
        if (value >= q_) throw IndexOutOfRange("element value out of range");
        return FieldElement(this, value);
    }

    /// z^i for the designated primitive element z (exponent taken mod q-1).
    FieldElement exp_element(std::uint64_t i) const {
        return FieldElement(this, exp_[static_cast<std::size_t>(i % (q_ - 1))]);
    }

    /// Discrete log of a nonzero value with respect to the primitive element.
    unsigned log(unsigned value) const {
        if (value == 0) throw ZeroElement("log of zero");
        return log_[value];
    }

    unsigned add(unsigned a, unsigned b) const {
        if (p_ == 2) return a ^ b;
        unsigned r = 0, shift = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += ((a / shift + b / shift) % p_) * shift;
            shift *= p_;
        }
        return r;
    }

    unsigned neg(unsigned a) const {
        if (p_ == 2) return a;
        unsigned r = 0, shift = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += ((p_ - a / shift % p_) % p_) * shift;
            shift *= p_;
        }
        return r;
    }

    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

    unsigned mul(unsigned a, unsigned b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    unsigned inv(unsigned a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    unsigned div(unsigned a, unsigned b) const {
        if (b == 0) throw DivisionByZero("division by zero");
        if (a == 0) return 0;
        return exp_[(log_[a] + (q_ - 1) - log_[b]) % (q_ - 1)];
    }

    unsigned pow(unsigned a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        return exp_[static_cast<std::size_t>((log_[a] * (e % (q_ - 1))) % (q_ - 1))];
    }

  private:
    Field(unsigned p, unsigned m, const std::vector<unsigned>& poly,
          std::optional<unsigned> primitive)
        : p_(p), m_(m) {
        if (p < 2 || !is_prime(p)) throw NotPrime("characteristic must be prime");
        if (m < 1) throw Error("extension degree must be >= 1");
        if (poly.size() != m + 1 || poly.front() != 1)
            throw Error("defining polynomial must be monic of degree m");
        for (unsigned c : poly)
            if (c >= p) throw Error("polynomial coefficient out of range");

        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > (1u << 16)) throw TooLarge("field size exceeds 2^16");
        }
        q_ = static_cast<unsigned>(q);
        poly_ = poly;
        // degree < m part in low-to-high order, used for reduction
        mod_.assign(poly.rbegin(), poly.rend() - 1);

        if (m_ >= 2 && !is_irreducible()) throw ReduciblePolynomial("defining polynomial factors over GF(p)");

        if (primitive) {
            if (*primitive == 0 || *primitive >= q_ || order_raw(*primitive) != q_ - 1)
                throw Error("designated element is not primitive");
            primitive_ = *primitive;
        } else {
            primitive_ = find_primitive();
        }

        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        unsigned v = 1;
        for (unsigned i = 0; i + 1 < q_; ++i) {
            exp_[i] = v;
            log_[v] = i;
            v = mul_raw(v, primitive_);
        }
        if (v != 1) throw Error("primitive element order check failed");
    }

    static bool is_prime(unsigned n) {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::vector<unsigned> unpack(unsigned v) const {
        std::vector<unsigned> c(m_);
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    }

    unsigned pack(const std::vector<unsigned>& c) const {
        unsigned v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
        return v;
    }

    // Polynomial product of packed values reduced by the defining polynomial.
    unsigned mul_raw(unsigned a, unsigned b) const {
        std::vector<unsigned> ca = unpack(a), cb = unpack(b);
        std::vector<unsigned> prod(2 * m_ - 1, 0);
        for (unsigned i = 0; i < m_; ++i) {
            if (ca[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
        // reduce: x^m == -(mod_[m-1] x^{m-1} + ... + mod_[0])
        for (std::size_t d = prod.size(); d-- > m_;) {
            unsigned c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < m_; ++i)
                prod[d - m_ + i] = (prod[d - m_ + i] + c * (p_ - mod_[i]) % p_) % p_;
        }
        prod.resize(m_);
        return pack(prod);
    }

    unsigned pow_raw(unsigned a, std::uint64_t e) const {
        unsigned r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t order_raw(unsigned a) const {
        std::uint64_t n = q_ - 1, ord = n, rem = n;
        std::vector<std::uint64_t> primes;
        for (std::uint64_t f = 2; f * f <= rem; ++f)
            if (rem % f == 0) {
                primes.push_back(f);
                while (rem % f == 0) rem /= f;
            }
        if (rem > 1) primes.push_back(rem);
        for (std::uint64_t f : primes)
            while (ord % f == 0 && pow_raw(a, ord / f) == 1) ord /= f;
        return ord;
    }

    unsigned find_primitive() const {
        if (q_ == 2) return 1;
        // prefer the class of x so that "z" matches the polynomial's root
        if (m_ >= 2 && order_raw(p_) == q_ - 1) return p_;
        for (unsigned v = 2; v < q_; ++v)
            if (order_raw(v) == q_ - 1) return v;
        throw Error("no primitive element found");
    }

    // Trial division by every monic polynomial of degree 1..m/2.
    bool is_irreducible() const {
        std::vector<unsigned> f(mod_);
        f.push_back(1);  // degree m, low-to-high
        for (unsigned d = 1; 2 * d <= m_; ++d) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p_;
            for (std::uint64_t t = 0; t < count; ++t) {
                std::vector<unsigned> g(d + 1);
                std::uint64_t tt = t;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = tt % p_;
                    tt /= p_;
                }
                g[d] = 1;
                if (divides(g, f)) return false;
            }
        }
        return true;
    }

    // Whether g divides f over GF(p); both low-to-high, g monic.
    bool divides(const std::vector<unsigned>& g, std::vector<unsigned> f) const {
        const std::size_t dg = g.size() - 1;
        for (std::size_t d = f.size(); d-- > dg;) {
            unsigned c = f[d] % p_;
            if (c == 0) continue;
            for (std::size_t i = 0; i <= dg; ++i)
                f[d - dg + i] = (f[d - dg + i] + c * (p_ - g[i]) % p_) % p_;
        }
        for (std::size_t i = 0; i < dg; ++i)
            if (f[i] % p_ != 0) return false;
        return true;
    }

    unsigned p_, m_, q_;
    std::vector<unsigned> poly_;  // high-to-low, as given
    std::vector<unsigned> mod_;   // low-to-high, degree < m part
    unsigned primitive_ = 0;
    std::vector<unsigned> exp_;
    std::vector<unsigned> log_;
};

inline FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldMismatch("elements from different fields");
    return FieldElement(field_, field_->add(value_, o.value_));
}

inline FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldMismatch("elements from different fields");
    return FieldElement(field_, field_->sub(value_, o.value_));
}

inline FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldMismatch("elements from different fields");
    return FieldElement(field_, field_->mul(value_, o.value_));
}

inline FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldMismatch("elements from different fields");
    return FieldElement(field_, field_->div(value_, o.value_));
}

inline FieldElement FieldElement::operator-() const {
    return FieldElement(field_, field_->neg(value_));
}

inline FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_->inv(value_));
}

inline FieldElement FieldElement::pow(std::uint64_t e) const {
    return FieldElement(field_, field_->pow(value_, e));
}

/// Smallest e >= 1 with a^e = 1; a is primitive iff the result is q-1.
inline std::uint64_t element_order(const FieldElement& a) {
    if (a.is_zero()) throw ZeroElement("order of zero is undefined");
    const Field& f = *a.field();
    std::uint64_t n = f.size() - 1;
    return n / std::gcd<std::uint64_t>(n, f.log(a.value()));
}

/// Canonical text form: "0", "1", "z", or "z^i".
inline std::string to_string(const FieldElement& a) {
    if (a.is_zero()) return "0";
    unsigned e = a.field()->log(a.value());
    if (e == 0) return "1";
    if (e == 1) return "z";
    return "z^" + std::to_string(e);
}

inline FieldElement parse_element(const FieldPtr& f, const std::string& s) {
    if (s == "0") return f->zero();
    if (s == "1") return f->one();
    if (s == "z") return f->primitive_element();
    if (s.size() > 2 && s[0] == 'z' && s[1] == '^') {
        std::uint64_t e = 0;
        for (std::size_t i = 2; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad exponent in element '" + s + "'");
            e = e * 10 + (s[i] - '0');
        }
        return f->exp_element(e);
    }
    // bare packed value, accepted for prime fields and hand-written input
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("cannot parse field element '" + s + "'");
        v = v * 10 + (c - '0');
    }
    if (v >= f->size()) throw ParseError("element value out of range: '" + s + "'");
    return f->element(static_cast<unsigned>(v));
}

/// "GF(p^m):poly=[c_m,...,c_0]" with coefficients highest degree first.
inline std::string field_literal(const Field& f) {
    std::string s = "GF(" + std::to_string(f.characteristic()) + "^" + std::to_string(f.degree()) +
                    "):poly=[";
    const auto& poly = f.poly();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(poly[i]);
    }
    return s + "]";
}

inline FieldPtr parse_field_literal(const std::string& s) {
    auto fail = [&]() -> FieldPtr { throw ParseError("bad field literal '" + s + "'"); };
    std::size_t i = 0;
    auto expect = [&](const std::string& tok) {
        if (s.compare(i, tok.size(), tok) != 0) fail();
        i += tok.size();
    };
    auto number = [&]() {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
        unsigned v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
        return v;
    };
    expect("GF(");
    unsigned p = number();
    expect("^");
    unsigned m = number();
    expect("):poly=[");
    std::vector<unsigned> poly;
    poly.push_back(number());
    while (i < s.size() && s[i] == ',') {
        ++i;
        poly.push_back(number());
    }
    expect("]");
    if (i != s.size()) fail();
    return Field::make(p, m, poly);
}

/// A standard field for a given minimum size: GF(2^m) with a fixed primitive
/// polynomial, the usual choices from coding practice.
inline FieldPtr default_binary_field(unsigned min_size) {
    static const std::vector<std::vector<unsigned>> polys = {
        {1, 1},                    // GF(2): x + 1
        {1, 1, 1},                 // GF(4): x^2 + x + 1
        {1, 0, 1, 1},              // GF(8): x^3 + x + 1
        {1, 0, 0, 1, 1},           // GF(16): x^4 + x + 1
        {1, 0, 0, 1, 0, 1},        // GF(32): x^5 + x^2 + 1
        {1, 0, 0, 0, 0, 1, 1},     // GF(64): x^6 + x + 1
        {1, 0, 0, 0, 1, 0, 0, 1},  // GF(128): x^7 + x^3 + 1
        {1, 0, 0, 0, 1, 1, 1, 0, 1},  // GF(256): x^8 + x^4 + x^3 + x^2 + 1
    };
    for (unsigned m = 1; m <= 8; ++m)
        if ((1u << m) >= min_size) return Field::make(2, m, polys[m - 1]);
    throw TooLarge("no default binary field of the requested size");
}

}  // namespace lrcpir

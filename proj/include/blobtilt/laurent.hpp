#pragma once

#include <map>
#include <sstream>
#include <stdexcept>

#include "blobtilt/cyclotomic_int.hpp"

namespace blobtilt {

/**
 * RingElement: Laurent polynomial in x with CycInt coefficients, i.e. an
 * element of Z[a, x, x^{-1}] / (a^4 + 1).  This is the generic ground ring
 * of the tensor-space representations; q = x^2 lives inside it.
 *
 * Stored terms never carry a zero coefficient.  Division is defined only
 * for units (monomials +/- a^i x^j); the generic tier stays a ring.
 */
class RingElement {
public:
    RingElement() = default;

    static RingElement zero() { return RingElement(); }
    static RingElement one() { return monomial(CycInt(1), 0); }
    static RingElement from_int(long n) { return monomial(CycInt(n), 0); }

    static RingElement monomial(CycInt c, long xexp) {
        RingElement e;
        if (!c.is_zero()) e.terms_.emplace(xexp, std::move(c));
        return e;
    }
    static RingElement x_power(long j) { return monomial(CycInt(1), j); }
    static RingElement a_power(long i) { return monomial(CycInt::a_power(i), 0); }
    // q = x^2
    static RingElement q_power(long k) { return x_power(2 * k); }

    const std::map<long, CycInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second.is_one();
    }

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    RingElement operator+(const RingElement& o) const {
        RingElement out(*this);
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }
    RingElement operator-(const RingElement& o) const {
        RingElement out(*this);
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }
    RingElement operator-() const {
        RingElement out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }
    RingElement operator*(const RingElement& o) const {
        RingElement out;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    bool is_unit() const {
        return terms_.size() == 1 && terms_.begin()->second.is_unit_monomial();
    }

    RingElement inverse() const {
        if (!is_unit())
            throw std::domain_error(
                "RingElement: inverse defined for unit monomials only");
        const auto& [e, c] = *terms_.begin();
        return monomial(c.unit_inverse(), -e);
    }

    RingElement pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        RingElement out = one();
        RingElement base(*this);
        unsigned long e = static_cast<unsigned long>(k);
        while (e > 0) {
            if (e & 1u) out *= base;
            base *= base;
            e >>= 1u;
        }
        return out;
    }

    size_t n_terms() const { return terms_.size(); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (e != 0) os << "*x^" << e;
            first = false;
        }
        return os.str();
    }

private:
    void add_term(long e, const CycInt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<long, CycInt> terms_;
};

}  // namespace blobtilt

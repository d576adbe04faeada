#pragma once

#include <memory>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "blobtilt/numeric.hpp"

namespace blobtilt {

/**
 * CyclotomicField: the number field Q(zeta_M), realized as Q[x]/(Phi_M(x))
 * where Phi_M is the M-th cyclotomic polynomial.  The artifact always uses
 * conductors divisible by 8 so that a = zeta_M^{M/8} satisfies a^4 = -1.
 */
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> make(long conductor) {
        if (conductor <= 0 || conductor % 8 != 0)
            throw std::invalid_argument(
                "CyclotomicField: conductor must be a positive multiple of 8");
        return std::shared_ptr<const CyclotomicField>(
            new CyclotomicField(conductor));
    }

    long conductor() const { return conductor_; }
    long degree() const { return degree_; }

    // Phi_M, monic with integer coefficients; phi_[k] is the x^k coefficient.
    const std::vector<Int>& modulus() const { return phi_; }

    // Reduce a rational-coefficient polynomial modulo Phi_M in place.
    void reduce(std::vector<Rat>& p) const {
        while (p.size() > static_cast<size_t>(degree_)) {
            Rat lead = p.back();
            size_t d = p.size() - 1;
            p.pop_back();
            if (lead == 0) continue;
            size_t off = d - static_cast<size_t>(degree_);
            for (long k = 0; k < degree_; ++k)
                p[off + static_cast<size_t>(k)] -=
                    lead * Rat(phi_[static_cast<size_t>(k)]);
        }
        p.resize(static_cast<size_t>(degree_), Rat(0));
        for (auto& c : p) c.canonicalize();
    }

private:
    explicit CyclotomicField(long conductor) : conductor_(conductor) {
        phi_ = cyclotomic_polynomial(conductor);
        degree_ = static_cast<long>(phi_.size()) - 1;
    }

    // Phi_n by the classical sieve: divide x^n - 1 by Phi_d for proper d | n.
    static std::vector<Int> cyclotomic_polynomial(long n) {
        std::vector<std::vector<Int>> cache(static_cast<size_t>(n) + 1);
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            std::vector<Int> num(static_cast<size_t>(d) + 1, Int(0));
            num[0] = -1;
            num[static_cast<size_t>(d)] = 1;  // x^d - 1
            for (long dd = 1; dd < d; ++dd)
                if (d % dd == 0) num = divide_exact(num, cache[static_cast<size_t>(dd)]);
            cache[static_cast<size_t>(d)] = std::move(num);
        }
        return cache[static_cast<size_t>(n)];
    }

    // Exact division of integer polynomials, divisor monic.
    static std::vector<Int> divide_exact(std::vector<Int> num,
                                         const std::vector<Int>& den) {
        size_t dn = num.size() - 1, dd = den.size() - 1;
        std::vector<Int> quot(dn - dd + 1, Int(0));
        for (size_t k = dn - dd + 1; k-- > 0;) {
            Int c = num[k + dd];
            if (c == 0) continue;
            quot[k] = c;
            for (size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
        }
        return quot;
    }

    long conductor_;
    long degree_;
    std::vector<Int> phi_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/**
 * FieldElement: an element of Q(zeta_M), stored as a rational-coefficient
 * polynomial of degree < phi(M) in zeta_M.  A default-constructed element is
 * the canonical zero, usable with elements of any conductor.
 */
class FieldElement {
public:
    FieldElement() = default;

    FieldElement(FieldPtr field, const Rat& constant) : field_(std::move(field)) {
        c_.assign(static_cast<size_t>(field_->degree()), Rat(0));
        c_[0] = constant;
        c_[0].canonicalize();
    }

    FieldElement(FieldPtr field, std::vector<Rat> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        field_->reduce(c_);
    }

    // zeta_M^k for any integer k.
    static FieldElement root_of_unity(const FieldPtr& field, long k) {
        long M = field->conductor();
        long kk = ((k % M) + M) % M;
        std::vector<Rat> p(static_cast<size_t>(kk) + 1, Rat(0));
        p[static_cast<size_t>(kk)] = 1;
        return FieldElement(field, std::move(p));
    }

    // The distinguished element a = zeta_M^{M/8} with a^4 = -1.
    static FieldElement a_root(const FieldPtr& field) {
        return root_of_unity(field, field->conductor() / 8);
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_one() const {
        if (!field_) return false;
        if (c_[0] != 1) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    // True if this is a rational constant; value() then returns it.
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat rational_value() const {
        if (!is_rational())
            throw std::domain_error("FieldElement: not a rational constant");
        return field_ ? c_[0] : Rat(0);
    }

    bool operator==(const FieldElement& o) const {
        if (!field_ || !o.field_) return is_zero() && o.is_zero();
        check_same(o);
        return c_ == o.c_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const {
        if (!field_) return o;
        if (!o.field_) return *this;
        check_same(o);
        FieldElement out(*this);
        for (size_t i = 0; i < c_.size(); ++i) {
            out.c_[i] += o.c_[i];
            out.c_[i].canonicalize();
        }
        return out;
    }
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
    FieldElement operator-() const {
        FieldElement out(*this);
        for (auto& v : out.c_) v = -v;
        return out;
    }
    FieldElement operator*(const FieldElement& o) const {
        if (!field_ || !o.field_) return FieldElement();
        check_same(o);
        std::vector<Rat> prod(2 * c_.size(), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j] == 0) continue;
                prod[i + j] += c_[i] * o.c_[j];
            }
        }
        return FieldElement(field_, std::move(prod));
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
        // extended Euclid in Q[x] against the (irreducible) modulus
        std::vector<Rat> r0(field_->modulus().size());
        for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(field_->modulus()[i]);
        std::vector<Rat> r1 = trimmed(c_);
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
        while (!poly_is_zero(r1)) {
            auto [quot, rem] = poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            auto qs1 = poly_mul(quot, s1);
            auto next = poly_sub(s0, qs1);
            s0 = std::move(s1);
            s1 = std::move(next);
        }
        // r0 = gcd (a nonzero constant since Phi_M is irreducible)
        if (r0.size() != 1)
            throw std::logic_error("FieldElement: modulus not coprime to element");
        Rat scale = 1 / r0[0];
        for (auto& v : s0) {
            v *= scale;
            v.canonicalize();
        }
        return FieldElement(field_, std::move(s0));
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        FieldElement out(field_, Rat(1));
        FieldElement base(*this);
        unsigned long e = static_cast<unsigned long>(k);
        while (e > 0) {
            if (e & 1u) out *= base;
            base *= base;
            e >>= 1u;
        }
        return out;
    }

    std::string str() const {
        if (!field_) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << c_[i].get_str();
            if (i > 0) os << "*z^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check_same(const FieldElement& o) const {
        if (field_->conductor() != o.field_->conductor())
            throw std::invalid_argument("FieldElement: conductor mismatch");
    }

    static bool poly_is_zero(const std::vector<Rat>& p) {
        for (const auto& v : p)
            if (v != 0) return false;
        return true;
    }
    static std::vector<Rat> trimmed(std::vector<Rat> p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        if (p.empty()) p.push_back(Rat(0));
        return p;
    }
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a,
                                     const std::vector<Rat>& b) {
        std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return trimmed(std::move(out));
    }
    static std::vector<Rat> poly_sub(const std::vector<Rat>& a,
                                     const std::vector<Rat>& b) {
        std::vector<Rat> out(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        return trimmed(std::move(out));
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(
        std::vector<Rat> num, const std::vector<Rat>& den) {
        num = trimmed(std::move(num));
        if (num.size() < den.size()) return {{Rat(0)}, std::move(num)};
        std::vector<Rat> quot(num.size() - den.size() + 1, Rat(0));
        for (size_t k = quot.size(); k-- > 0;) {
            Rat c = num[k + den.size() - 1] / den.back();
            if (c == 0) continue;
            quot[k] = c;
            for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
        }
        return {trimmed(std::move(quot)), trimmed(std::move(num))};
    }

    FieldPtr field_;
    std::vector<Rat> c_;
};

}  // namespace blobtilt

#pragma once

#include <array>
#include <sstream>
#include <stdexcept>

#include "blobtilt/numeric.hpp"

namespace blobtilt {

/**
 * CycInt: elements of Z[a]/(a^4 + 1), stored reduced as
 * c0 + c1*a + c2*a^2 + c3*a^3 with integer coefficients.
 *
 * a is an abstract eighth root of unity: a^4 = -1, a^8 = 1,
 * and consequently a^2 + a^{-2} = 0.
 */
class CycInt {
public:
    CycInt() : c_{Int(0), Int(0), Int(0), Int(0)} {}
    explicit CycInt(long n) : CycInt() { c_[0] = n; }
    explicit CycInt(Int n) : CycInt() { c_[0] = std::move(n); }
    CycInt(Int c0, Int c1, Int c2, Int c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    // a^k for any integer k, reduced via a^4 = -1.
    static CycInt a_power(long k) {
        long kk = ((k % 8) + 8) % 8;
        int sign = 1;
        if (kk >= 4) {
            kk -= 4;
            sign = -1;
        }
        CycInt out;
        out.c_[kk] = sign;
        return out;
    }

    const Int& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_one() const {
        return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }

    bool operator==(const CycInt& o) const { return c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    CycInt operator+(const CycInt& o) const {
        return CycInt(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2],
                      c_[3] + o.c_[3]);
    }
    CycInt operator-(const CycInt& o) const {
        return CycInt(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2],
                      c_[3] - o.c_[3]);
    }
    CycInt operator-() const { return CycInt(-c_[0], -c_[1], -c_[2], -c_[3]); }

    CycInt operator*(const CycInt& o) const {
        // negacyclic convolution: a^4 folds back with a sign flip
        std::array<Int, 7> r{};
        for (int i = 0; i < 4; ++i) {
            if (c_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < 4; ++j) {
                if (o.c_[static_cast<size_t>(j)] == 0) continue;
                r[static_cast<size_t>(i + j)] +=
                    c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
            }
        }
        return CycInt(r[0] - r[4], r[1] - r[5], r[2] - r[6], std::move(r[3]));
    }

    CycInt& operator+=(const CycInt& o) { return *this = *this + o; }
    CycInt& operator-=(const CycInt& o) { return *this = *this - o; }
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    // Units of Z[a]/(a^4+1) of monomial form: +/- a^k.
    bool is_unit_monomial() const {
        int nz = -1;
        for (int i = 0; i < 4; ++i) {
            if (c_[static_cast<size_t>(i)] != 0) {
                if (nz >= 0) return false;
                nz = i;
            }
        }
        if (nz < 0) return false;
        const Int& v = c_[static_cast<size_t>(nz)];
        return v == 1 || v == -1;
    }

    CycInt unit_inverse() const {
        for (int i = 0; i < 4; ++i) {
            const Int& v = c_[static_cast<size_t>(i)];
            if (v == 0) continue;
            if (!is_unit_monomial() || (v != 1 && v != -1))
                throw std::domain_error("CycInt: inverse of a non-unit");
            CycInt inv = a_power(-i);
            if (v == -1) inv = -inv;
            return inv;
        }
        throw std::domain_error("CycInt: inverse of zero");
    }

    std::string str() const {
        static const char* mono[4] = {"", "a", "a^2", "a^3"};
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < 4; ++i) {
            const Int& v = c_[static_cast<size_t>(i)];
            if (v == 0) continue;
            if (!first && v > 0) os << "+";
            if (i == 0) {
                os << v.get_str();
            } else if (v == 1) {
                os << mono[i];
            } else if (v == -1) {
                os << "-" << mono[i];
            } else {
                os << v.get_str() << "*" << mono[i];
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    std::array<Int, 4> c_;
};

}  // namespace blobtilt

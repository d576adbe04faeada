#pragma once

#include <stdexcept>

#include "blobtilt/laurent.hpp"
#include "blobtilt/qnum.hpp"
#include "blobtilt/specialization.hpp"

namespace blobtilt {

/**
 * ParamBundle: the reparameterized blob data
 *
 *   gamma = q^{m-1} - q^{-m+1},   delta = q^m - q^{-m},
 *   r = a^2 q^m,   s = a^5 x,   t = a^3 x,   q = x^2,
 *
 * over either the generic ring (RingElement) or a cyclotomic field.
 * The defining identities st = q, [2]_s [2]_t = [2]_q, r + r^{-1} = a^2 delta
 * and st/r + r/st = a^2 gamma are checked at construction.
 */
template <class T>
struct ParamBundle {
    long m = 0;
    T q, gamma, delta, r, s, t;
    T a2;  // image of a^2; a^{-2} = -a^2
    T one, zero;

    T a2_inverse() const { return -a2; }
    T two_q() const { return qnum(2, q); }
};

namespace detail {

template <class T>
void check_bundle_identities(const ParamBundle<T>& p) {
    const T st = p.s * p.t;
    if (!(st == p.q)) throw std::logic_error("ParamBundle: st != q");
    if (!(qnum(2, p.s) * qnum(2, p.t) == qnum(2, p.q)))
        throw std::logic_error("ParamBundle: [2]_s [2]_t != [2]_q");
    if (!(p.r + p.r.pow(-1) == p.a2 * p.delta))
        throw std::logic_error("ParamBundle: r + r^-1 != a^2 delta");
    if (!(st * p.r.pow(-1) + p.r * st.pow(-1) == p.a2 * p.gamma))
        throw std::logic_error("ParamBundle: st/r + r/st != a^2 gamma");
}

}  // namespace detail

inline ParamBundle<RingElement> make_generic_params(long m) {
    ParamBundle<RingElement> p;
    p.m = m;
    p.one = RingElement::one();
    p.zero = RingElement::zero();
    p.q = RingElement::q_power(1);
    p.gamma = RingElement::q_power(m - 1) - RingElement::q_power(1 - m);
    p.delta = RingElement::q_power(m) - RingElement::q_power(-m);
    p.r = RingElement::a_power(2) * RingElement::q_power(m);
    p.s = RingElement::a_power(5) * RingElement::x_power(1);
    p.t = RingElement::a_power(3) * RingElement::x_power(1);
    p.a2 = RingElement::a_power(2);
    detail::check_bundle_identities(p);
    return p;
}

inline ParamBundle<FieldElement> make_specialized_params(const Specialization& spec) {
    if (!spec.valid())
        throw InvalidSpecialization(
            "specialization has [2]_q = 0 or [m]_q = 0: " + spec.str());
    ParamBundle<FieldElement> p;
    p.m = spec.m();
    p.one = FieldElement(spec.field(), Rat(1));
    p.zero = FieldElement(spec.field(), Rat(0));
    const FieldElement a = spec.a_value();
    const FieldElement x = spec.x_value();
    p.q = x.pow(2);
    p.gamma = p.q.pow(spec.m() - 1) - p.q.pow(1 - spec.m());
    p.delta = p.q.pow(spec.m()) - p.q.pow(-spec.m());
    p.r = a.pow(2) * p.q.pow(spec.m());
    p.s = a.pow(5) * x;
    p.t = a.pow(3) * x;
    p.a2 = a.pow(2);
    detail::check_bundle_identities(p);
    return p;
}

// Base change Z[a, x, x^{-1}] -> Q(zeta_M): a ring homomorphism.
inline FieldElement specialize(const RingElement& e, const Specialization& spec) {
    const FieldElement a = spec.a_value();
    const FieldElement x = spec.x_value();
    FieldElement out(spec.field(), Rat(0));
    for (const auto& [xexp, cyc] : e.terms()) {
        FieldElement coeff(spec.field(), Rat(cyc.coeff(0)));
        for (int i = 1; i < 4; ++i)
            if (cyc.coeff(i) != 0)
                coeff += FieldElement(spec.field(), Rat(cyc.coeff(i))) * a.pow(i);
        out += coeff * x.pow(xexp);
    }
    return out;
}

}  // namespace blobtilt

#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "blobtilt/cyclotomic_field.hpp"
#include "blobtilt/qnum.hpp"

namespace blobtilt {

/**
 * Specialization: a base change of the generic ring Z[a, x, x^{-1}] into the
 * cyclotomic field Q(zeta_M), sending a to zeta_M^{M/8} and x either to a
 * nonzero rational or to zeta_M^k.  Carries the blob integer parameter m.
 *
 * Valid (quasihereditary regime) iff [2]_q != 0 and [m]_q != 0 for q = x^2.
 */
class Specialization {
public:
    Specialization(long conductor, Rat x, long m)
        : field_(CyclotomicField::make(conductor)),
          x_is_root_(false),
          x_rational_(std::move(x)),
          x_root_exp_(0),
          m_(m) {
        if (x_rational_ == 0)
            throw InvalidSpecialization("Specialization: x must be invertible");
        x_rational_.canonicalize();
    }

    // x = zeta_M^k
    static Specialization at_root(long conductor, long k, long m) {
        Specialization s(conductor, Rat(1), m);
        s.x_is_root_ = true;
        s.x_root_exp_ = ((k % conductor) + conductor) % conductor;
        return s;
    }

    long conductor() const { return field_->conductor(); }
    long m() const { return m_; }
    const FieldPtr& field() const { return field_; }
    bool x_is_root() const { return x_is_root_; }
    const Rat& x_rational() const { return x_rational_; }
    long x_root_exp() const { return x_root_exp_; }

    FieldElement x_value() const {
        if (x_is_root_) return FieldElement::root_of_unity(field_, x_root_exp_);
        return FieldElement(field_, x_rational_);
    }
    FieldElement a_value() const { return FieldElement::a_root(field_); }
    FieldElement q_value() const { return x_value().pow(2); }

    bool valid() const {
        FieldElement q = q_value();
        return !qnum(2, q).is_zero() && !qnum(m_, q).is_zero();
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["M"] = conductor();
        if (x_is_root_)
            j["x"] = nlohmann::json{{"root", {conductor(), x_root_exp_}}};
        else
            j["x"] = x_rational_.get_str();
        j["m"] = m_;
        return j;
    }

    static Specialization from_json(const nlohmann::json& j) {
        long M = j.at("M").get<long>();
        long m = j.at("m").get<long>();
        const auto& x = j.at("x");
        if (x.is_object()) {
            auto root = x.at("root");
            return at_root(root.at(0).get<long>(), root.at(1).get<long>(), m);
        }
        Rat xr(x.get<std::string>());
        xr.canonicalize();
        return Specialization(M, xr, m);
    }

    std::string str() const { return to_json().dump(); }

private:
    FieldPtr field_;
    bool x_is_root_;
    Rat x_rational_;
    long x_root_exp_;
    long m_;
};

}  // namespace blobtilt

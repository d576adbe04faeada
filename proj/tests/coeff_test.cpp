#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace blobtilt;

TEST_CASE("CycInt follows a^4 = -1") {
    CHECK(CycInt::a_power(1) * CycInt::a_power(3) == CycInt(-1));
    CHECK(CycInt::a_power(4) == CycInt(-1));
    CHECK(CycInt::a_power(8) == CycInt(1));
    CHECK(CycInt::a_power(-2) == -CycInt::a_power(2));
    // a^2 + a^{-2} = 0
    CHECK((CycInt::a_power(2) + CycInt::a_power(-2)).is_zero());
}

TEST_CASE("CycInt unit inverses") {
    for (long k = -8; k <= 8; ++k) {
        CycInt u = CycInt::a_power(k);
        CHECK(u * u.unit_inverse() == CycInt(1));
    }
    CHECK_THROWS_AS(CycInt(2).unit_inverse(), std::domain_error);
    CHECK_THROWS_AS((CycInt(1) + CycInt::a_power(1)).unit_inverse(),
                    std::domain_error);
}

TEST_CASE("RingElement basics") {
    auto e = RingElement::monomial(CycInt(3), 2) + RingElement::a_power(1);
    CHECK(e + RingElement::zero() == e);
    // (a^2 x)(a^2 x^-1) = a^4 = -1
    auto lhs = (RingElement::a_power(2) * RingElement::x_power(1)) *
               (RingElement::a_power(2) * RingElement::x_power(-1));
    CHECK(lhs == RingElement::from_int(-1));
    CHECK(RingElement::x_power(3).inverse() == RingElement::x_power(-3));
    CHECK_THROWS_AS(e.inverse(), std::domain_error);
    CHECK_THROWS_AS((RingElement::from_int(2)).inverse(), std::domain_error);
}

TEST_CASE("RingElement ring axioms on random elements") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        auto a = bttest::random_ring_element(rng);
        auto b = bttest::random_ring_element(rng);
        auto c = bttest::random_ring_element(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("qnum") {
    auto q = RingElement::q_power(1);
    CHECK(qnum(2, q) == q + q.inverse());
    CHECK(qnum(1, q) == RingElement::one());
    CHECK(qnum(0, q).is_zero());
    CHECK(qnum(-3, q) == -qnum(3, q));
    // [3]_q at q = 2: 4 + 1 + 1/4 = 21/4
    auto field = CyclotomicField::make(8);
    FieldElement two(field, Rat(2));
    CHECK(qnum(3, two) == FieldElement(field, Rat(21, 4)));
}

TEST_CASE("ParamBundle identities, generic") {
    for (long m : {1L, 2L, 3L, 4L, 5L}) {
        auto p = make_generic_params(m);  // throws if an identity fails
        CHECK(p.s * p.t == p.q);
        CHECK(qnum(2, p.s) * qnum(2, p.t) == qnum(2, p.q));
        CHECK(p.r + p.r.pow(-1) == p.a2 * p.delta);
        CHECK(p.q * p.r.pow(-1) + p.r * p.q.pow(-1) == p.a2 * p.gamma);
    }
    auto p2 = make_generic_params(2);
    CHECK(p2.gamma == RingElement::q_power(1) - RingElement::q_power(-1));
    CHECK(p2.delta == RingElement::q_power(2) - RingElement::q_power(-2));
    auto p1 = make_generic_params(1);
    CHECK(p1.gamma.is_zero());
    CHECK(p1.delta == RingElement::q_power(1) - RingElement::q_power(-1));
}

TEST_CASE("specialize is a ring homomorphism") {
    Specialization unit_spec(8, Rat(1), 2);
    auto q = RingElement::q_power(1);
    CHECK(specialize(q + q.inverse(), unit_spec) ==
          FieldElement(unit_spec.field(), Rat(2)));

    Specialization spec3(8, Rat(3), 2);
    auto a2 = RingElement::a_power(2);
    CHECK(specialize(a2, spec3) * specialize(a2, spec3) ==
          FieldElement(spec3.field(), Rat(-1)));
    // delta at m=2, x -> 3: q = 9, q^2 - q^-2 = 81 - 1/81 = 6560/81
    auto delta = make_generic_params(2).delta;
    CHECK(specialize(delta, spec3) == FieldElement(spec3.field(), Rat(6560, 81)));

    std::mt19937_64 rng(7);
    for (const auto& spec : {unit_spec, spec3, Specialization(8, Rat(5, 3), 3)}) {
        for (int i = 0; i < 200; ++i) {
            auto a = bttest::random_ring_element(rng);
            auto b = bttest::random_ring_element(rng);
            CHECK(specialize(a * b, spec) == specialize(a, spec) * specialize(b, spec));
            CHECK(specialize(a + b, spec) == specialize(a, spec) + specialize(b, spec));
        }
    }
}

TEST_CASE("FieldElement inverses and a^4 = -1 in the field") {
    std::mt19937_64 rng(11);
    for (long M : {8L, 24L}) {
        auto field = CyclotomicField::make(M);
        FieldElement a = FieldElement::a_root(field);
        CHECK(a.pow(4) == FieldElement(field, Rat(-1)));
        for (int i = 0; i < 40; ++i) {
            auto x = bttest::random_field_element(field, rng);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == FieldElement(field, Rat(1)));
        }
    }
    CHECK_THROWS_AS(CyclotomicField::make(12), std::invalid_argument);
}

TEST_CASE("Specialization validity and JSON") {
    CHECK(bttest::default_spec().valid());
    // x = zeta_8 gives q = i and [2]_q = 0
    auto bad = Specialization::at_root(8, 1, 2);
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(make_specialized_params(bad), InvalidSpecialization);
    // x = zeta_24^2 (order 12), q = zeta_24^4 of order 6: [2]_q != 0, [2]_q...
    auto root_spec = Specialization::at_root(24, 2, 2);
    CHECK(root_spec.valid());
    auto p = make_specialized_params(root_spec);
    CHECK(p.s * p.t == p.q);

    auto j = bttest::default_spec().to_json();
    CHECK(j["M"] == 8);
    CHECK(j["x"] == "2");
    auto round = Specialization::from_json(j);
    CHECK(round.x_rational() == Rat(2));
    auto j2 = Specialization::at_root(24, 5, 3).to_json();
    auto round2 = Specialization::from_json(j2);
    CHECK(round2.x_is_root());
    CHECK(round2.x_root_exp() == 5);
    CHECK(round2.m() == 3);
}

TEST_CASE("zero x is rejected") {
    CHECK_THROWS_AS(Specialization(8, Rat(0), 2), InvalidSpecialization);
}

// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dimalg/derivation.hpp"
#include "dimalg/sampling.hpp"
#include "helpers.hpp"

using namespace dimalg;
using testutil::c;
using testutil::var;

namespace {

ModelPtr line_model() { return make_model({"x", "y"}, {}, {"u"}); }

DimDerivation coordinate_field(const ModelPtr& m, const std::string& name) {
    std::vector<Poly> sym(m->vars()->size(), Poly::zero(m->vars()));
    sym[m->vars()->require(name)] = Poly::constant(m->vars(), 1);
    return from_line_derivation(m, sym, {Poly::zero(m->vars())});
}

DimDerivation random_derivation(Sampler& s, const ModelPtr& m, bool random_shift) {
    std::vector<Poly> sym;
    for (std::size_t i = 0; i < m->vars()->size(); ++i)
        sym.push_back(s.poly(m->vars(), 2, 2));
    std::vector<Poly> weights;
    for (std::size_t l = 0; l < m->line_count(); ++l)
        weights.push_back(s.poly(m->vars(), 2, 2));
    DimVector shift = random_shift ? s.dims(m->line_count(), -2, 2)
                                   : dim_zero(m->line_count());
    return DimDerivation(m, shift, sym, weights, DimElement::unit_power(m, shift));
}

} // namespace

TEST_CASE("derivation application") {
    ModelPtr m = line_model();
    const auto& t = m->vars();
    DimDerivation dx = coordinate_field(m, "x");
    Poly x = var(t, "x");
    SUBCASE("vector fields act on coefficients in any slice") {
        for (std::int64_t k : {-2, 0, 3})
            CHECK(apply(dx, DimElement(m, {k}, x * x)) == DimElement(m, {k}, x.scaled(2)));
    }
    SUBCASE("euler-type weight counts unit powers") {
        DimDerivation euler = from_line_derivation(
            m, {Poly::zero(t), Poly::zero(t)}, {Poly::constant(t, 1)});
        for (std::int64_t n : {-3, -1, 0, 1, 4})
            CHECK(apply(euler, DimElement::unit_power(m, {n})) ==
                  DimElement(m, {n}, Poly::constant(t, n)));
    }
    SUBCASE("derivations kill the identity") {
        Sampler s(3);
        DimDerivation d = random_derivation(s, m, false);
        CHECK(apply(d, DimElement::one(m)).is_zero());
    }
}

TEST_CASE("commutators of coordinate fields") {
    ModelPtr m = line_model();
    const auto& t = m->vars();
    DimDerivation dx = coordinate_field(m, "x");
    DimDerivation dy = coordinate_field(m, "y");
    // x d/dx
    DimDerivation xdx = from_line_derivation(
        m, {var(t, "x"), Poly::zero(t)}, {Poly::zero(t)});
    CHECK(commutator(dx, xdx) == dx);
    CHECK(commutator(xdx, xdx).is_zero());
    CHECK(commutator(dx, dy).is_zero());
}

TEST_CASE("commutator agrees with the composition of actions") {
    ModelPtr m = make_model({"x", "y"}, {}, {"u", "w"});
    Sampler s(13);
    for (int k = 0; k < 40; ++k) {
        DimDerivation d1 = random_derivation(s, m, true);
        DimDerivation d2 = random_derivation(s, m, true);
        DimDerivation comm = commutator(d1, d2);
        for (int j = 0; j < 5; ++j) {
            DimElement e = s.element(m, 2, 2);
            CHECK(apply(comm, e) ==
                  dim_sub(apply(d1, apply(d2, e)), apply(d2, apply(d1, e))));
        }
    }
}

TEST_CASE("leibniz identity for derivations") {
    ModelPtr m = make_model({"x", "y"}, {"s"}, {"u"});
    Sampler smp(19);
    for (int k = 0; k < 100; ++k) {
        DimDerivation d = random_derivation(smp, m, true);
        DimElement a = smp.element(m, 2, 2);
        DimElement b = smp.element(m, 2, 2);
        CHECK(apply(d, odot(a, b)) == dim_add(odot(apply(d, a), b), odot(a, apply(d, b))));
        DimElement b2 = DimElement(m, a.dim(), b.coeff());
        CHECK(apply(d, dim_add(a, b2)) == dim_add(apply(d, a), apply(d, b2)));
    }
}

TEST_CASE("commutator satisfies the Jacobi identity") {
    ModelPtr m = line_model();
    Sampler s(29);
    for (int k = 0; k < 25; ++k) {
        DimDerivation a = random_derivation(s, m, true);
        DimDerivation b = random_derivation(s, m, true);
        DimDerivation cd = random_derivation(s, m, true);
        DimDerivation lhs = commutator(a, commutator(b, cd));
        DimDerivation r1 = commutator(commutator(a, b), cd);
        DimDerivation r2 = commutator(b, commutator(a, cd));
        // [a,[b,c]] = [[a,b],c] + [b,[a,c]] compared through the action.
        for (int j = 0; j < 4; ++j) {
            DimElement e = s.element(m, 2, 2);
            CHECK(apply(lhs, e) == dim_add(apply(r1, e), apply(r2, e)));
        }
    }
}

TEST_CASE("antisymmetry of the commutator") {
    ModelPtr m = line_model();
    Sampler s(31);
    for (int k = 0; k < 25; ++k) {
        DimDerivation a = random_derivation(s, m, true);
        DimDerivation b = random_derivation(s, m, true);
        DimDerivation ab = commutator(a, b);
        DimDerivation ba = commutator(b, a);
        DimElement e = s.element(m, 2, 2);
        CHECK(dim_add(apply(ab, e), apply(ba, e)).is_zero());
        CHECK(commutator(a, a).is_zero());
    }
}

TEST_CASE("shift-zero derivations are closed under commutator") {
    ModelPtr m = line_model();
    Sampler s(37);
    for (int k = 0; k < 25; ++k) {
        DimDerivation a = random_derivation(s, m, false);
        DimDerivation b = random_derivation(s, m, false);
        CHECK(commutator(a, b).shift() == dim_zero(1));
    }
}

TEST_CASE("line derivations extend to negative powers by duality") {
    ModelPtr m = line_model();
    const auto& t = m->vars();
    SUBCASE("plain vector field annihilates the dual unit") {
        DimDerivation d = from_line_derivation(
            m, {Poly::constant(t, 1), Poly::zero(t)}, {Poly::zero(t)});
        CHECK(apply(d, DimElement::unit_power(m, {-1})).is_zero());
    }
    SUBCASE("weight acts by -1 on the inverse unit") {
        DimDerivation d = from_line_derivation(
            m, {Poly::zero(t), Poly::zero(t)}, {Poly::constant(t, 1)});
        CHECK(apply(d, DimElement::unit_power(m, {-1})) ==
              DimElement(m, {-1}, Poly::constant(t, -1)));
    }
    SUBCASE("duality pairing is differentiated by Leibniz") {
        Sampler s(41);
        for (int k = 0; k < 100; ++k) {
            DimDerivation d = random_derivation(s, m, false);
            DimElement sigma = DimElement(m, {-1}, s.poly(t, 2, 2));
            DimElement sec = DimElement(m, {1}, s.poly(t, 2, 2));
            CHECK(apply(d, odot(sigma, sec)) ==
                  dim_add(odot(apply(d, sigma), sec), odot(sigma, apply(d, sec))));
        }
    }
}

// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "dimalg/sampling.hpp"
#include "helpers.hpp"

using namespace dimalg;
using testutil::c;
using testutil::var;

TEST_CASE("coisotrope detection") {
    BracketSpec r4 = testutil::r4_poisson();
    const ModelPtr& m = r4.model();
    CHECK(is_coisotrope(r4, CoordIdeal(m, {"p1"})));
    CHECK_FALSE(is_coisotrope(r4, CoordIdeal(m, {"q1", "p1"})));
    ModelPtr contact = testutil::contact_model();
    CHECK(is_coisotrope(testutil::contact_spec(contact), CoordIdeal(contact, {"z"})));
}

TEST_CASE("reduction of the symplectic prototype") {
    BracketSpec r4 = testutil::r4_poisson();
    const ModelPtr& m = r4.model();
    ReductionData red(CoordIdeal(m, {"p1"}), {"q2", "p2"});
    BracketSpec out = reduce(r4, red);
    CHECK(out.model()->vars()->names() == std::vector<std::string>{"q2", "p2"});
    CHECK(out.model()->lines() == m->lines());
    CHECK(out.bracket_dim() == DimVector{0});
    CHECK(out.entry(out.resolve_generator("q2"), out.resolve_generator("p2")) ==
          DimElement::one(out.model()));
    CHECK(out.table().size() == 1);
}

TEST_CASE("reducibility identity on random lifts") {
    BracketSpec r4 = testutil::r4_poisson();
    const ModelPtr& m = r4.model();
    CoordIdeal ideal(m, {"p1"});
    BracketSpec out = reduce(r4, ReductionData(ideal, {"q2", "p2"}));
    const ModelPtr& rm = out.model();
    Poly p1 = var(m->vars(), "p1");

    // Lifts a reduced element and pollutes it with a random ideal element.
    Sampler s(3);
    auto lift = [&](const DimElement& e) {
        std::vector<Poly> images;
        for (std::size_t i = 0; i < rm->vars()->size(); ++i)
            images.push_back(var(m->vars(), rm->vars()->name(i)));
        Poly lifted = e.coeff().substitute_into(images, m->vars());
        return DimElement(m, e.dim(), lifted + p1 * s.poly(m->vars(), 2, 2));
    };
    auto project = [&](const DimElement& e) {
        DimElement q = quotient_project(e, ideal);
        // On these lifts the projected coefficient only involves survivors.
        std::map<std::size_t, Poly> collapse{
            {m->vars()->require("q1"), Poly::zero(m->vars())}};
        Poly coeff = q.coeff();
        std::vector<Poly> images;
        images.push_back(Poly::zero(rm->vars())); // q1
        images.push_back(Poly::zero(rm->vars())); // p1
        images.push_back(var(rm->vars(), "q2"));
        images.push_back(var(rm->vars(), "p2"));
        return DimElement(rm, q.dim(), coeff.substitute_into(images, rm->vars()));
    };

    for (int k = 0; k < 100; ++k) {
        DimElement a = s.element(rm, 2, 2);
        DimElement b = s.element(rm, 2, 2);
        DimElement big = evaluate(r4, lift(a), lift(b));
        CHECK(project(big) == evaluate(out, a, b));
    }
}

TEST_CASE("reduction error paths") {
    BracketSpec r4 = testutil::r4_poisson();
    const ModelPtr& m = r4.model();
    SUBCASE("non-coisotropic ideal") {
        CHECK_THROWS_AS(reduce(r4, ReductionData(CoordIdeal(m, {"q1", "p1"}), {"q2"})),
                        NotCoisotropic);
    }
    SUBCASE("survivor outside the idealizer") {
        CHECK_THROWS_AS(reduce(r4, ReductionData(CoordIdeal(m, {"p1"}), {"q1", "q2", "p2"})),
                        IdealizerViolation);
        try {
            reduce(r4, ReductionData(CoordIdeal(m, {"p1"}), {"q1", "q2", "p2"}));
        } catch (const IdealizerViolation& e) {
            CHECK(std::string(e.what()).find("q1") != std::string::npos);
        }
    }
    SUBCASE("survivors must avoid the ideal") {
        CHECK_THROWS_AS(ReductionData(CoordIdeal(m, {"p1"}), {"p1"}), Error);
    }
}

TEST_CASE("reduction rejects entries that keep collapsed variables") {
    // {x,y} = w survives projection by (v) but depends on the collapsed w.
    ModelPtr m = make_model({"x", "y", "w", "v"}, {}, {"u"});
    BracketSpec spec(m, DimVector{0});
    spec.set_entry("x", "y", DimElement::from_poly(m, var(m->vars(), "w")));
    CHECK_THROWS_AS(reduce(spec, ReductionData(CoordIdeal(m, {"v"}), {"x", "y"})), IllDefined);
}

TEST_CASE("degenerate reduction to a point chart") {
    ModelPtr m = make_model({"x", "y"}, {}, {"u"});
    BracketSpec zero_spec(m, DimVector{0});
    BracketSpec out = reduce(zero_spec, ReductionData(CoordIdeal(m, {"x", "y"}), {}));
    CHECK(out.model()->vars()->size() == 0);
    CHECK(out.model()->line_count() == 1);
    CHECK(out.table().empty());
}

TEST_CASE("heterogeneous tensor product") {
    BracketSpec a = testutil::r2_poisson("x1", "y1", "v");
    BracketSpec b = testutil::r2_poisson("x2", "y2", "w");
    BracketSpec prod = tensor_heterogeneous(a, b);
    const ModelPtr& m = prod.model();
    CHECK(m->vars()->size() == 4);
    CHECK(m->line_count() == 2);
    CHECK(dim_is_zero(prod.bracket_dim()));
    CHECK(prod.entry(prod.resolve_generator("x1_1"), prod.resolve_generator("y1_1")) ==
          DimElement::one(m));
    CHECK(prod.entry(prod.resolve_generator("x1_1"), prod.resolve_generator("x2_2")).is_zero());
    CHECK(verify_poisson(prod, kDefaultSeed, 60).passed);

    SUBCASE("tensor with the empty spec re-indexes") {
        ModelPtr point = make_model({}, {}, {});
        BracketSpec trivial(point, DimVector{});
        BracketSpec ext = tensor_heterogeneous(a, trivial);
        CHECK(ext.model()->vars()->names() == std::vector<std::string>{"x1_1", "y1_1"});
        CHECK(ext.table().size() == a.table().size());
        CHECK(verify_poisson(ext, kDefaultSeed, 40).passed);
    }
    SUBCASE("nonzero bracket dimension is rejected") {
        ModelPtr contact = testutil::contact_model();
        CHECK_THROWS_AS(tensor_heterogeneous(testutil::contact_spec(contact), b),
                        NonzeroBracketDimension);
    }
}

TEST_CASE("jacobi product of two contact structures") {
    ModelPtr m1 = testutil::contact_model();
    ModelPtr m2 = testutil::contact_model("a", "b", "z2", "w");
    BracketSpec j1 = testutil::contact_spec(m1);
    BracketSpec j2 = testutil::contact_spec(m2);
    BracketSpec prod = product_jacobi(j1, j2);
    CHECK(prod.bracket_dim() == DimVector{-1, 0});
    CHECK(verify_poisson(prod, kDefaultSeed, 80).passed);

    ProductModel pm(m1, m2, true);
    Poly t_poly = Poly::variable(prod.model()->vars(), "t");
    auto inc2 = [&](const DimElement& e) {
        std::int64_t q = e.dim()[0];
        DimVector d = dim_zero(2);
        d[0] = q;
        return DimElement(prod.model(), d, pm.include_right(e.coeff()) * t_poly.unit_pow(-q));
    };
    Sampler s(7);
    SUBCASE("cross brackets vanish") {
        for (int k = 0; k < 100; ++k) {
            DimElement a = pm.include_left(s.element(m1, 2, 2));
            DimElement b = inc2(s.element(m2, 2, 2));
            CHECK(evaluate(prod, a, b).is_zero());
        }
    }
    SUBCASE("inclusions are bracket homomorphisms") {
        for (int k = 0; k < 60; ++k) {
            DimElement a = s.element(m1, 2, 2);
            DimElement b = s.element(m1, 2, 2);
            CHECK(evaluate(prod, pm.include_left(a), pm.include_left(b)) ==
                  pm.include_left(evaluate(j1, a, b)));
            DimElement a2 = s.element(m2, 2, 2);
            DimElement b2 = s.element(m2, 2, 2);
            CHECK(evaluate(prod, inc2(a2), inc2(b2)) == inc2(evaluate(j2, a2, b2)));
        }
    }
    SUBCASE("every bracket value lands in the product dimension") {
        for (int k = 0; k < 60; ++k) {
            DimElement a = s.element(prod.model(), 2, 2);
            DimElement b = s.element(prod.model(), 2, 2);
            CHECK(evaluate(prod, a, b).dim() ==
                  dim_sum(dim_sum(a.dim(), b.dim()), DimVector{-1, 0}));
        }
    }
    SUBCASE("tensor-product inclusion is a bracket homomorphism") {
        for (int k = 0; k < 40; ++k) {
            DimElement s1 = s.element(m1, 2, 2);
            DimElement r1 = s.element(m1, 2, 2);
            DimElement s2 = s.element(m2, 2, 2);
            DimElement r2 = s.element(m2, 2, 2);
            DimElement lhs = evaluate(prod, odot(pm.include_left(s1), inc2(s2)),
                                      odot(pm.include_left(r1), inc2(r2)));
            DimElement rhs =
                dim_add(odot(pm.include_left(evaluate(j1, s1, r1)), inc2(odot(s2, r2))),
                        odot(pm.include_left(odot(s1, r1)), inc2(evaluate(j2, s2, r2))));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("jacobi product with the trivial structure") {
    ModelPtr m1 = testutil::contact_model();
    ModelPtr m2 = make_model({"w"}, {}, {"v"});
    BracketSpec contact = testutil::contact_spec(m1);
    BracketSpec trivial = from_jacobi(testutil::trivial_jacobi_data(m2));
    BracketSpec prod = product_jacobi(contact, trivial);
    CHECK(verify_poisson(prod, kDefaultSeed, 60).passed);
    // Left brackets reproduce contact values under the inclusion.
    ProductModel pm(m1, m2, true);
    CHECK(prod.entry(prod.resolve_generator("q_1"), prod.resolve_generator("p_1")) ==
          pm.include_left(contact.entry(contact.resolve_generator("q"),
                                        contact.resolve_generator("p"))));
    BracketSpec both_trivial = product_jacobi(from_jacobi(testutil::trivial_jacobi_data(m1)),
                                              from_jacobi(testutil::trivial_jacobi_data(m2)));
    CHECK(both_trivial.table().empty());
}

TEST_CASE("poly-poisson product") {
    BracketSpec a = testutil::r2_poisson("x1", "y1", "v");
    BracketSpec b = testutil::r2_poisson("x2", "y2", "w");
    BracketSpec prod = product_poly_poisson(a, b);
    const ModelPtr& m = prod.model();
    CHECK(dim_is_zero(prod.bracket_dim()));
    CHECK(verify_poisson(prod, kDefaultSeed, 60).passed);
    CHECK(m->vars()->index_of("t").has_value());

    SUBCASE("the dimensionless slice is an ordinary Poisson bracket") {
        auto E = [&](const char* n) {
            return DimElement::from_poly(m, Poly::variable(m->vars(), n));
        };
        CHECK(evaluate(prod, E("x1_1"), E("y1_1")) == DimElement::one(m));
        CHECK(evaluate(prod, E("x2_2"), E("y2_2")) == DimElement::one(m));
        CHECK(evaluate(prod, E("x1_1"), E("x2_2")).is_zero());
        CHECK(evaluate(prod, E("t"), E("x1_1")).is_zero());
    }
    SUBCASE("projections preserve brackets on the dimensionless slice") {
        ProductModel pm(a.model(), b.model(), true);
        Sampler s(11);
        for (int k = 0; k < 60; ++k) {
            Poly f = s.poly(a.model()->vars(), 2, 2);
            Poly g = s.poly(a.model()->vars(), 2, 2);
            DimElement lhs = evaluate(prod, DimElement::from_poly(m, pm.include_left(f)),
                                      DimElement::from_poly(m, pm.include_left(g)));
            DimElement rhs_small = evaluate(a, DimElement::from_poly(a.model(), f),
                                            DimElement::from_poly(a.model(), g));
            CHECK(lhs == pm.include_left(rhs_small));
        }
    }
    SUBCASE("trivial factor adds a free fibre coordinate") {
        ModelPtr pt = make_model({"s0"}, {}, {"w"});
        BracketSpec trivial(pt, DimVector{0});
        BracketSpec ext = product_poly_poisson(a, trivial);
        CHECK(verify_poisson(ext, kDefaultSeed, 40).passed);
        for (const auto& [key, value] : ext.table()) {
            CHECK(gen_name(ext.model(), key.first) != "t");
            CHECK(gen_name(ext.model(), key.second) != "t");
        }
    }
}

TEST_CASE("poly-poisson product with interacting units") {
    // A nonzero unit-unit bracket {u1,u2} = x u1 u2 forces nontrivial fibre
    // coordinate entries, including a t-t bracket.
    ModelPtr m = make_model({"x", "y"}, {}, {"u1", "u2"});
    BracketSpec a(m, dim_zero(2));
    a.set_entry("u1", "u2", DimElement(m, {1, 1}, var(m->vars(), "x")));
    REQUIRE(verify_poisson(a, kDefaultSeed, 60).passed);

    BracketSpec b = testutil::r2_poisson("w", "s", "v");
    BracketSpec prod = product_poly_poisson(a, b);
    CHECK(verify_poisson(prod, kDefaultSeed, 80).passed);
    const ModelPtr& pm = prod.model();
    GenId t11 = prod.resolve_generator("t_1_1");
    GenId t21 = prod.resolve_generator("t_2_1");
    Poly expected = var(pm->vars(), "x_1") * var(pm->vars(), "t_1_1") *
                    var(pm->vars(), "t_2_1");
    CHECK(prod.entry(t11, t21) == DimElement(pm, dim_zero(3), expected));
}

TEST_CASE("casimir-compensated product") {
    ModelPtr m1 = testutil::plane_model("x1", "y1", "v");
    ModelPtr m2 = testutil::plane_model("x2", "y2", "w");
    BracketSpec a = from_jacobi(testutil::unit_free_poisson_data(m1));
    BracketSpec b = from_jacobi(testutil::unit_free_poisson_data(m2));

    SUBCASE("unit-free Poisson factors with unit Casimirs") {
        BracketSpec prod = product_casimir(a, DimElement::unit_power(m1, {1}), b,
                                           DimElement::unit_power(m2, {1}));
        CHECK(dim_is_zero(prod.bracket_dim()));
        CHECK(verify_poisson(prod, kDefaultSeed, 60).passed);
        const ModelPtr& m = prod.model();
        auto E = [&](const char* n) {
            return DimElement::from_poly(m, Poly::variable(m->vars(), n));
        };
        CHECK(evaluate(prod, E("x1_1"), E("y1_1")) == DimElement::one(m));
        CHECK(evaluate(prod, E("x2_2"), E("y2_2")) == DimElement::one(m));
    }
    SUBCASE("inverse-slice Casimirs are accepted") {
        BracketSpec p1 = product_casimir(a, DimElement::unit_power(m1, {1}), b,
                                         DimElement::unit_power(m2, {1}));
        BracketSpec p2 = product_casimir(a, DimElement::unit_power(m1, {-1}), b,
                                         DimElement::unit_power(m2, {-1}));
        CHECK(p1 == p2);
    }
    SUBCASE("a non-Casimir is rejected with a witness") {
        ModelPtr cm = testutil::contact_model();
        BracketSpec contact = testutil::contact_spec(cm);
        try {
            product_casimir(contact, DimElement::unit_power(cm, {1}), b,
                            DimElement::unit_power(m2, {1}));
            FAIL("expected NotACasimir");
        } catch (const NotACasimir& e) {
            CHECK(std::string(e.what()).find("z") != std::string::npos);
        }
    }
    SUBCASE("a Casimir in the wrong slice is rejected") {
        CHECK_THROWS_AS(product_casimir(a, DimElement::unit_power(m1, {2}), b,
                                        DimElement::unit_power(m2, {1})),
                        DimensionIncompatible);
    }
    SUBCASE("dimensionless inputs with unit Casimirs reproduce the poly-Poisson product") {
        BracketSpec pa = testutil::r2_poisson("x1", "y1", "v");
        BracketSpec pb = testutil::r2_poisson("x2", "y2", "w");
        BracketSpec via_casimir =
            product_casimir(pa, DimElement::one(pa.model()), pb, DimElement::one(pb.model()));
        BracketSpec direct = product_poly_poisson(pa, pb);
        CHECK(via_casimir == direct);
    }
}

TEST_CASE("constructed specs pass verification") {
    BracketSpec a = testutil::r2_poisson("x1", "y1", "v");
    BracketSpec b = testutil::r2_poisson("x2", "y2", "w");
    CHECK(verify_poisson(tensor_heterogeneous(a, b), kDefaultSeed, 40).passed);
    CHECK(verify_poisson(product_poly_poisson(a, b), kDefaultSeed, 40).passed);
    ModelPtr m1 = testutil::contact_model();
    ModelPtr m2 = testutil::contact_model("a", "b", "c", "w");
    CHECK(verify_poisson(product_jacobi(testutil::contact_spec(m1), testutil::contact_spec(m2)),
                         kDefaultSeed, 40)
              .passed);
}

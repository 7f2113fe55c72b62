// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dimalg/algebra_ops.hpp"
#include "dimalg/bracket.hpp"
#include "dimalg/dsl.hpp"
#include "dimalg/errors.hpp"

namespace testutil {

using namespace dimalg;

inline Poly c(const VarTablePtr& t, int v) { return Poly::constant(t, Rational(v)); }
inline Poly var(const VarTablePtr& t, const std::string& n) { return Poly::variable(t, n); }

inline ModelPtr contact_model(const std::string& q = "q", const std::string& p = "p",
                              const std::string& z = "z", const std::string& u = "u") {
    return make_model({q, p, z}, {}, {u});
}

// Lambda = (d/dq + p d/dz) ^ d/dp, E = d/dz.
inline JacobiData contact_data(const ModelPtr& m) {
    const auto& t = m->vars();
    std::vector<std::vector<Poly>> lambda(3, std::vector<Poly>(3, Poly::zero(t)));
    lambda[0][1] = c(t, 1);
    lambda[1][0] = c(t, -1);
    lambda[2][1] = var(t, t->name(1)); // the momentum coordinate
    lambda[1][2] = -lambda[2][1];
    std::vector<Poly> reeb{Poly::zero(t), Poly::zero(t), c(t, 1)};
    return JacobiData(m, lambda, reeb);
}

inline BracketSpec contact_spec(const ModelPtr& m) { return from_jacobi(contact_data(m)); }

// Lambda = d/dx ^ d/dy, E = 0: a unit-free Poisson structure.
inline JacobiData unit_free_poisson_data(const ModelPtr& m) {
    const auto& t = m->vars();
    std::vector<std::vector<Poly>> lambda(2, std::vector<Poly>(2, Poly::zero(t)));
    lambda[0][1] = c(t, 1);
    lambda[1][0] = c(t, -1);
    std::vector<Poly> reeb{Poly::zero(t), Poly::zero(t)};
    return JacobiData(m, lambda, reeb);
}

inline ModelPtr plane_model(const std::string& x = "x", const std::string& y = "y",
                            const std::string& u = "u") {
    return make_model({x, y}, {}, {u});
}

// Lambda = x d/dx ^ d/dy, E = 0.
inline JacobiData linear_poisson_data(const ModelPtr& m) {
    const auto& t = m->vars();
    std::vector<std::vector<Poly>> lambda(2, std::vector<Poly>(2, Poly::zero(t)));
    lambda[0][1] = var(t, t->name(0));
    lambda[1][0] = -lambda[0][1];
    std::vector<Poly> reeb{Poly::zero(t), Poly::zero(t)};
    return JacobiData(m, lambda, reeb);
}

inline JacobiData trivial_jacobi_data(const ModelPtr& m) {
    const auto& t = m->vars();
    std::size_t n = t->size();
    std::vector<std::vector<Poly>> lambda(n, std::vector<Poly>(n, Poly::zero(t)));
    std::vector<Poly> reeb(n, Poly::zero(t));
    return JacobiData(m, lambda, reeb);
}

// {x,y} = 1, {y,z} = y: fails the Lambda Jacobi condition.
inline JacobiData broken_lambda_data() {
    ModelPtr m = make_model({"x", "y", "z"}, {}, {"u"});
    const auto& t = m->vars();
    std::vector<std::vector<Poly>> lambda(3, std::vector<Poly>(3, Poly::zero(t)));
    lambda[0][1] = c(t, 1);
    lambda[1][0] = c(t, -1);
    lambda[1][2] = var(t, "y");
    lambda[2][1] = -lambda[1][2];
    std::vector<Poly> reeb(3, Poly::zero(t));
    return JacobiData(m, lambda, reeb);
}

// Lambda = d/dx ^ d/dy, E = x d/dx: fails the Reeb invariance condition.
inline JacobiData broken_reeb_data() {
    ModelPtr m = plane_model();
    const auto& t = m->vars();
    std::vector<std::vector<Poly>> lambda(2, std::vector<Poly>(2, Poly::zero(t)));
    lambda[0][1] = c(t, 1);
    lambda[1][0] = c(t, -1);
    std::vector<Poly> reeb{var(t, "x"), Poly::zero(t)};
    return JacobiData(m, lambda, reeb);
}

// Dimensionless symplectic R^4: {q1,p1} = {q2,p2} = 1 at bracket dimension 0.
inline BracketSpec r4_poisson() {
    ModelPtr m = make_model({"q1", "p1", "q2", "p2"}, {}, {"u"});
    BracketSpec spec(m, DimVector{0});
    spec.set_entry("q1", "p1", DimElement::one(m));
    spec.set_entry("q2", "p2", DimElement::one(m));
    return spec;
}

// Dimensionless symplectic plane: {x,y} = 1 at bracket dimension 0.
inline BracketSpec r2_poisson(const std::string& x, const std::string& y,
                              const std::string& u) {
    ModelPtr m = make_model({x, y}, {}, {u});
    BracketSpec spec(m, DimVector{0});
    spec.set_entry(x, y, DimElement::one(m));
    return spec;
}

} // namespace testutil

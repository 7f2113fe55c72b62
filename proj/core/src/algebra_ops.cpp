// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/algebra_ops.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dimalg/errors.hpp"

namespace dimalg {

ReductionData::ReductionData(CoordIdeal i, std::vector<std::string> s)
    : ideal(std::move(i)), survivors(std::move(s)) {
    const auto& vars = ideal.model()->vars();
    std::set<std::string> seen;
    for (const auto& name : survivors) {
        std::size_t idx = vars->require(name);
        if (ideal.vanishes(idx))
            throw Error("survivor '" + name + "' is a vanishing variable");
        if (!seen.insert(name).second)
            throw NameClash("survivor '" + name + "' listed twice");
    }
}

bool is_coisotrope(const BracketSpec& spec, const CoordIdeal& ideal) {
    require_same_model(spec.model(), ideal.model(), "is_coisotrope");
    const auto& idx = ideal.vanishing_indices();
    for (std::size_t a = 0; a < idx.size(); ++a) {
        DimElement ga = gen_element(spec.model(), GenId{false, idx[a]});
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            DimElement gb = gen_element(spec.model(), GenId{false, idx[b]});
            if (!ideal_membership(evaluate(spec, ga, gb), ideal))
                return false;
        }
    }
    return true;
}

namespace {

Poly restrict_poly(const Poly& p, const VarTablePtr& reduced,
                   const std::vector<std::optional<std::size_t>>& ambient_to_reduced) {
    Poly out = Poly::zero(reduced);
    for (const auto& [e, c] : p.terms()) {
        Exponents re(reduced->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!ambient_to_reduced[i])
                throw IllDefined("projected entry depends on collapsed variable");
            re[*ambient_to_reduced[i]] = e[i];
        }
        out += Poly::monomial(reduced, std::move(re), c);
    }
    return out;
}

} // namespace

BracketSpec reduce(const BracketSpec& spec, const ReductionData& reduction) {
    const ModelPtr& model = spec.model();
    const CoordIdeal& ideal = reduction.ideal;
    require_same_model(model, ideal.model(), "reduce");

    if (!is_coisotrope(spec, ideal)) {
        std::string detail;
        const auto& idx = ideal.vanishing_indices();
        for (std::size_t a = 0; a < idx.size() && detail.empty(); ++a)
            for (std::size_t b = a + 1; b < idx.size() && detail.empty(); ++b) {
                DimElement v = evaluate(spec, gen_element(model, GenId{false, idx[a]}),
                                        gen_element(model, GenId{false, idx[b]}));
                if (!ideal_membership(v, ideal))
                    detail = "{" + model->vars()->name(idx[a]) + "," + model->vars()->name(idx[b]) +
                             "} = " + v.render();
            }
        throw NotCoisotropic("ideal is not closed under the bracket: " + detail);
    }

    // Idealizer membership of every reduced generator, the algebraic form of
    // the compatibility between the submersion and the coisotrope.
    std::vector<GenId> lifted;
    for (const auto& name : reduction.survivors)
        lifted.push_back(GenId{false, model->vars()->require(name)});
    for (std::size_t l = 0; l < model->line_count(); ++l)
        lifted.push_back(GenId{true, l});
    for (GenId g : lifted) {
        DimElement ge = gen_element(model, g);
        for (std::size_t vi : ideal.vanishing_indices()) {
            DimElement v = evaluate(spec, ge, gen_element(model, GenId{false, vi}));
            if (!ideal_membership(v, ideal))
                throw IdealizerViolation("'" + gen_name(model, g) +
                                         "' is not in the Lie idealizer: {" + gen_name(model, g) +
                                         "," + model->vars()->name(vi) + "} = " + v.render());
        }
    }

    // Survivor chart, preserving the ambient variable order.
    std::set<std::string> survivor_set(reduction.survivors.begin(), reduction.survivors.end());
    std::vector<std::string> red_ordinary;
    std::vector<std::string> red_invertible;
    std::vector<std::optional<std::size_t>> ambient_to_reduced(model->vars()->size());
    for (std::size_t i = 0; i < model->vars()->size(); ++i) {
        const std::string& name = model->vars()->name(i);
        if (!survivor_set.count(name))
            continue;
        if (model->vars()->is_invertible(i))
            red_invertible.push_back(name);
        else
            red_ordinary.push_back(name);
    }
    ModelPtr reduced_model = make_model(red_ordinary, red_invertible, model->lines());
    for (std::size_t i = 0; i < model->vars()->size(); ++i)
        ambient_to_reduced[i] = reduced_model->vars()->index_of(model->vars()->name(i));

    BracketSpec out(reduced_model, spec.bracket_dim());
    std::vector<GenId> red_gens = generators(reduced_model);
    auto lift_gen = [&](GenId g) -> GenId {
        if (g.is_line)
            return g;
        return GenId{false, model->vars()->require(reduced_model->vars()->name(g.index))};
    };
    for (std::size_t a = 0; a < red_gens.size(); ++a)
        for (std::size_t b = a + 1; b < red_gens.size(); ++b) {
            DimElement value = evaluate(spec, gen_element(model, lift_gen(red_gens[a])),
                                        gen_element(model, lift_gen(red_gens[b])));
            DimElement projected = quotient_project(value, ideal);
            Poly restricted = restrict_poly(projected.coeff(), reduced_model->vars(),
                                            ambient_to_reduced);
            out.set_entry(red_gens[a], red_gens[b],
                          DimElement(reduced_model, projected.dim(), std::move(restricted)));
        }

    VerifyReport check = verify_poisson(out, kDefaultSeed, 50);
    if (!check.passed) {
        const std::string* w = check.first_counterexample();
        throw ConstructionInconsistent("reduced bracket fails verification: " +
                                       (w ? *w : std::string("unknown")));
    }
    return out;
}

ProductModel::ProductModel(ModelPtr left, ModelPtr right, bool with_t_vars)
    : left_(std::move(left)), right_(std::move(right)), with_t_(with_t_vars) {
    auto renamed = [](const std::vector<std::string>& names, const char* suffix) {
        std::vector<std::string> out;
        out.reserve(names.size());
        for (const auto& n : names)
            out.push_back(n + suffix);
        return out;
    };
    std::vector<std::string> ordinary = renamed(left_->vars()->ordinary(), "_1");
    for (auto& n : renamed(right_->vars()->ordinary(), "_2"))
        ordinary.push_back(std::move(n));
    std::vector<std::string> invertible = renamed(left_->vars()->invertible(), "_1");
    for (auto& n : renamed(right_->vars()->invertible(), "_2"))
        invertible.push_back(std::move(n));

    std::size_t ml = left_->line_count();
    std::size_t mr = right_->line_count();
    if (with_t_) {
        t_names_.assign(ml, std::vector<std::string>(mr));
        for (std::size_t l = 0; l < ml; ++l)
            for (std::size_t r = 0; r < mr; ++r) {
                std::string name = (ml == 1 && mr == 1)
                                       ? std::string("t")
                                       : "t_" + std::to_string(l + 1) + "_" + std::to_string(r + 1);
                t_names_[l][r] = name;
                invertible.push_back(std::move(name));
            }
    }
    std::vector<std::string> lines = renamed(left_->lines(), "_1");
    for (auto& n : renamed(right_->lines(), "_2"))
        lines.push_back(std::move(n));
    joined_ = make_model(std::move(ordinary), std::move(invertible), std::move(lines));
}

const std::string& ProductModel::t_name(std::size_t l, std::size_t r) const {
    if (!with_t_)
        throw Error("product model was built without fibre coordinates");
    return t_names_.at(l).at(r);
}

Poly ProductModel::include_left(const Poly& p) const {
    std::vector<Poly> images;
    images.reserve(left_->vars()->size());
    for (std::size_t i = 0; i < left_->vars()->size(); ++i)
        images.push_back(Poly::variable(joined_->vars(), left_->vars()->name(i) + "_1"));
    return p.substitute_into(images, joined_->vars());
}

Poly ProductModel::include_right(const Poly& p) const {
    std::vector<Poly> images;
    images.reserve(right_->vars()->size());
    for (std::size_t i = 0; i < right_->vars()->size(); ++i)
        images.push_back(Poly::variable(joined_->vars(), right_->vars()->name(i) + "_2"));
    return p.substitute_into(images, joined_->vars());
}

DimElement ProductModel::include_left(const DimElement& a) const {
    require_same_model(a.model(), left_, "include_left");
    TensorDimSet ts = tensor_dim_set(left_->line_count(), right_->line_count(), {});
    return DimElement(joined_, ts.left.apply(a.dim()), include_left(a.coeff()));
}

DimElement ProductModel::include_right(const DimElement& a) const {
    require_same_model(a.model(), right_, "include_right");
    TensorDimSet ts = tensor_dim_set(left_->line_count(), right_->line_count(), {});
    return DimElement(joined_, ts.right.apply(a.dim()), include_right(a.coeff()));
}

GenId ProductModel::map_left(GenId g) const {
    if (g.is_line)
        return GenId{true, g.index};
    return GenId{false, joined_->vars()->require(left_->vars()->name(g.index) + "_1")};
}

GenId ProductModel::map_right(GenId g) const {
    if (g.is_line)
        return GenId{true, left_->line_count() + g.index};
    return GenId{false, joined_->vars()->require(right_->vars()->name(g.index) + "_2")};
}

DimElement ProductModel::tautological(std::size_t l, std::size_t r) const {
    DimVector d = dim_zero(joined_->line_count());
    d[l] = -1;
    d[left_->line_count() + r] = 1;
    return DimElement(joined_, std::move(d), Poly::variable(joined_->vars(), t_name(l, r)));
}

namespace {

// {t_(l,r), z} := t ⊙ (u1_l^{-1} ⊙ {u1_l, z} - u2_r^{-1} ⊙ {u2_r, z}),
// the unique entries making the tautological T_(l,r) = t u1_l^{-1} ⊙ u2_r a
// Casimir of the product bracket; cross-zero and the projection-morphism
// conditions leave no other choice.
DimElement t_entry(const ProductModel& pm, const BracketSpec& partial, std::size_t l,
                   std::size_t r, GenId z) {
    const ModelPtr& joined = pm.joined();
    GenId u1{true, l};
    GenId u2{true, pm.left()->line_count() + r};
    DimElement t_elem =
        DimElement::from_poly(joined, Poly::variable(joined->vars(), pm.t_name(l, r)));
    DimElement lhs = odot(invert(gen_element(joined, u1)), partial.entry(u1, z));
    DimElement rhs = odot(invert(gen_element(joined, u2)), partial.entry(u2, z));
    return odot(t_elem, dim_sub(lhs, rhs));
}

void check_construction(const BracketSpec& out, const ProductModel& pm) {
    // Tautological elements must be Casimirs.
    if (pm.has_t_vars()) {
        for (std::size_t l = 0; l < pm.left()->line_count(); ++l)
            for (std::size_t r = 0; r < pm.right()->line_count(); ++r) {
                std::string witness;
                if (!is_casimir(out, pm.tautological(l, r), &witness))
                    throw ConstructionInconsistent(
                        "tautological ratio element fails to be Casimir against '" + witness +
                        "'");
            }
    }
    // Included subalgebras commute.
    for (GenId g : generators(pm.left())) {
        DimElement gi = pm.include_left(gen_element(pm.left(), g));
        for (GenId h : generators(pm.right())) {
            DimElement hj = pm.include_right(gen_element(pm.right(), h));
            if (!evaluate(out, gi, hj).is_zero())
                throw ConstructionInconsistent("cross bracket of included generators {" +
                                               gen_name(pm.left(), g) + "_1," +
                                               gen_name(pm.right(), h) + "_2} is nonzero");
        }
    }
}

void require_dimensionless(const BracketSpec& s, const char* which) {
    if (!dim_is_zero(s.bracket_dim()))
        throw NonzeroBracketDimension(
            std::string(which) +
            " bracket has nonzero dimension; use the homogeneous Jacobi product or the "
            "Casimir-compensated product");
}

} // namespace

BracketSpec tensor_heterogeneous(const BracketSpec& a, const BracketSpec& b) {
    require_dimensionless(a, "left");
    require_dimensionless(b, "right");
    ProductModel pm(a.model(), b.model(), /*with_t_vars=*/false);
    BracketSpec out(pm.joined(), dim_zero(pm.joined()->line_count()));
    for (const auto& [key, value] : a.table())
        out.set_entry(pm.map_left(key.first), pm.map_left(key.second), pm.include_left(value));
    for (const auto& [key, value] : b.table())
        out.set_entry(pm.map_right(key.first), pm.map_right(key.second), pm.include_right(value));
    check_construction(out, pm);
    return out;
}

BracketSpec product_jacobi(const BracketSpec& a, const BracketSpec& b) {
    if (a.model()->line_count() != 1 || b.model()->line_count() != 1)
        throw DimensionIncompatible("Jacobi product expects single-line factors");
    if (a.bracket_dim() != DimVector{-1} || b.bracket_dim() != DimVector{-1})
        throw DimensionIncompatible("Jacobi product expects bracket dimension [-1] on both sides");

    ProductModel pm(a.model(), b.model(), /*with_t_vars=*/true);
    const ModelPtr& joined = pm.joined();
    Poly t_poly = Poly::variable(joined->vars(), pm.t_name(0, 0));
    DimElement taut = pm.tautological(0, 0); // t * u1^{-1} ⊙ u2, dimension (-1,1)

    // The second projection of the line product is carried by the first
    // line: sections of the right factor include with t-powers matching
    // their dimension, P u^q  ->  P t^{-q} u1^q.
    auto include_right_twisted = [&](const DimElement& e) {
        std::int64_t q = e.dim()[0];
        Poly coeff = pm.include_right(e.coeff()) * t_poly.unit_pow(-q);
        DimVector d = dim_zero(joined->line_count());
        d[0] = q;
        return DimElement(joined, std::move(d), std::move(coeff));
    };

    BracketSpec out(joined, DimVector{-1, 0});
    for (const auto& [key, value] : a.table())
        out.set_entry(pm.map_left(key.first), pm.map_left(key.second), pm.include_left(value));

    GenId u2 = pm.map_right(GenId{true, 0});
    std::vector<GenId> right_vars;
    for (std::size_t i = 0; i < b.model()->vars()->size(); ++i)
        right_vars.push_back(GenId{false, i});
    for (std::size_t i = 0; i < right_vars.size(); ++i) {
        for (std::size_t k = i + 1; k < right_vars.size(); ++k) {
            DimElement e = b.entry(right_vars[i], right_vars[k]);
            out.set_entry(pm.map_right(right_vars[i]), pm.map_right(right_vars[k]),
                          include_right_twisted(e));
        }
        // u2 = T ⊙ (twisted image of the right unit), and T is Casimir, so
        // {u2, y} = T ⊙ ι2({u, y}).
        DimElement uy = b.entry(GenId{true, 0}, right_vars[i]);
        out.set_entry(u2, pm.map_right(right_vars[i]), odot(taut, include_right_twisted(uy)));
    }

    // Fibre coordinate entries, solved from the defining conditions.
    GenId t_gen{false, joined->vars()->require(pm.t_name(0, 0))};
    for (GenId z : generators(joined)) {
        if (z == t_gen)
            continue;
        out.set_entry(t_gen, z, t_entry(pm, out, 0, 0, z));
    }

    check_construction(out, pm);
    // Both projections must be bracket morphisms on generators.
    for (GenId g : generators(a.model()))
        for (GenId h : generators(a.model())) {
            DimElement lhs = evaluate(out, pm.include_left(gen_element(a.model(), g)),
                                      pm.include_left(gen_element(a.model(), h)));
            if (lhs != pm.include_left(evaluate(a, gen_element(a.model(), g),
                                                gen_element(a.model(), h))))
                throw ConstructionInconsistent("left inclusion fails to intertwine {" +
                                               gen_name(a.model(), g) + "," +
                                               gen_name(a.model(), h) + "}");
        }
    for (GenId g : generators(b.model()))
        for (GenId h : generators(b.model())) {
            DimElement lhs = evaluate(out, include_right_twisted(gen_element(b.model(), g)),
                                      include_right_twisted(gen_element(b.model(), h)));
            if (lhs != include_right_twisted(evaluate(b, gen_element(b.model(), g),
                                                      gen_element(b.model(), h))))
                throw ConstructionInconsistent("right inclusion fails to intertwine {" +
                                               gen_name(b.model(), g) + "," +
                                               gen_name(b.model(), h) + "}");
        }
    return out;
}

BracketSpec product_poly_poisson(const BracketSpec& a, const BracketSpec& b) {
    require_dimensionless(a, "left");
    require_dimensionless(b, "right");
    ProductModel pm(a.model(), b.model(), /*with_t_vars=*/true);
    const ModelPtr& joined = pm.joined();
    BracketSpec out(joined, dim_zero(joined->line_count()));
    for (const auto& [key, value] : a.table())
        out.set_entry(pm.map_left(key.first), pm.map_left(key.second), pm.include_left(value));
    for (const auto& [key, value] : b.table())
        out.set_entry(pm.map_right(key.first), pm.map_right(key.second), pm.include_right(value));

    // Non-t generators of the joined chart, in canonical order.
    std::vector<GenId> base_gens;
    std::vector<GenId> t_gens;
    std::vector<std::pair<std::size_t, std::size_t>> t_pairs;
    for (std::size_t l = 0; l < pm.left()->line_count(); ++l)
        for (std::size_t r = 0; r < pm.right()->line_count(); ++r) {
            t_gens.push_back(GenId{false, joined->vars()->require(pm.t_name(l, r))});
            t_pairs.emplace_back(l, r);
        }
    for (GenId g : generators(joined))
        if (std::find(t_gens.begin(), t_gens.end(), g) == t_gens.end())
            base_gens.push_back(g);

    for (std::size_t k = 0; k < t_gens.size(); ++k)
        for (GenId z : base_gens)
            out.set_entry(t_gens[k], z, t_entry(pm, out, t_pairs[k].first, t_pairs[k].second, z));
    for (std::size_t k = 0; k < t_gens.size(); ++k)
        for (std::size_t k2 = k + 1; k2 < t_gens.size(); ++k2)
            out.set_entry(t_gens[k], t_gens[k2],
                          t_entry(pm, out, t_pairs[k].first, t_pairs[k].second, t_gens[k2]));

    check_construction(out, pm);
    return out;
}

BracketSpec product_casimir(const BracketSpec& a, const DimElement& casimir_a,
                            const BracketSpec& b, const DimElement& casimir_b) {
    auto compensator = [](const BracketSpec& s, const DimElement& u, const char* side) {
        require_same_model(s.model(), u.model(), "product_casimir");
        std::string witness;
        if (!u.coeff().is_unit())
            throw NotACasimir(std::string(side) + " Casimir coefficient is not a unit: " +
                              u.render());
        if (!is_casimir(s, u, &witness))
            throw NotACasimir(std::string(side) + " element is not a Casimir: {" + u.render() +
                              ", " + witness + "} != 0");
        // The compensated terms need dimension -k; accept a Casimir given in
        // slice k via its inverse.
        if (u.dim() == dim_neg(s.bracket_dim()))
            return u;
        if (u.dim() == s.bracket_dim())
            return invert(u);
        throw DimensionIncompatible(std::string(side) + " Casimir lives in slice " +
                                    render_dim(u.dim()) + "; expected " +
                                    render_dim(dim_neg(s.bracket_dim())) + " (or its negative)");
    };
    DimElement ua = compensator(a, casimir_a, "left");
    DimElement ub = compensator(b, casimir_b, "right");

    ProductModel pm(a.model(), b.model(), /*with_t_vars=*/true);
    const ModelPtr& joined = pm.joined();
    BracketSpec out(joined, dim_zero(joined->line_count()));
    for (const auto& [key, value] : a.table())
        out.set_entry(pm.map_left(key.first), pm.map_left(key.second),
                      pm.include_left(odot(ua, value)));
    for (const auto& [key, value] : b.table())
        out.set_entry(pm.map_right(key.first), pm.map_right(key.second),
                      pm.include_right(odot(ub, value)));

    std::vector<GenId> t_gens;
    std::vector<std::pair<std::size_t, std::size_t>> t_pairs;
    for (std::size_t l = 0; l < pm.left()->line_count(); ++l)
        for (std::size_t r = 0; r < pm.right()->line_count(); ++r) {
            t_gens.push_back(GenId{false, joined->vars()->require(pm.t_name(l, r))});
            t_pairs.emplace_back(l, r);
        }
    std::vector<GenId> base_gens;
    for (GenId g : generators(joined))
        if (std::find(t_gens.begin(), t_gens.end(), g) == t_gens.end())
            base_gens.push_back(g);
    for (std::size_t k = 0; k < t_gens.size(); ++k)
        for (GenId z : base_gens)
            out.set_entry(t_gens[k], z, t_entry(pm, out, t_pairs[k].first, t_pairs[k].second, z));
    for (std::size_t k = 0; k < t_gens.size(); ++k)
        for (std::size_t k2 = k + 1; k2 < t_gens.size(); ++k2)
            out.set_entry(t_gens[k], t_gens[k2],
                          t_entry(pm, out, t_pairs[k].first, t_pairs[k].second, t_gens[k2]));

    check_construction(out, pm);
    return out;
}

} // namespace dimalg

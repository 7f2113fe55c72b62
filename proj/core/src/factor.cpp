// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/factor.hpp"

#include <set>

#include "dimalg/errors.hpp"

namespace dimalg {

Factor::Factor(ModelPtr source, ModelPtr target,
               std::vector<Poly> base_map,
               std::vector<std::optional<std::size_t>> line_assign,
               std::vector<Poly> transitions)
    : source_(std::move(source)), target_(std::move(target)), base_map_(std::move(base_map)),
      line_assign_(std::move(line_assign)), transitions_(std::move(transitions)) {
    const auto& tvars = *target_->vars();
    if (base_map_.size() != tvars.size())
        throw ShapeMismatch("base map needs one image per target variable");
    for (std::size_t i = 0; i < base_map_.size(); ++i) {
        if (!same_table(base_map_[i].table(), source_->vars()))
            throw VarTableMismatch("base map image of '" + tvars.name(i) +
                                   "' lives on the wrong chart");
        if (tvars.is_invertible(i) && !base_map_[i].is_unit())
            throw InvertibilityViolation("base map image of invertible variable '" +
                                         tvars.name(i) + "' is not a unit");
    }
    if (line_assign_.size() != source_->line_count())
        throw ShapeMismatch("line assignment needs one entry per source line");
    if (transitions_.size() != source_->line_count())
        throw ShapeMismatch("one transition per source line required");
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < line_assign_.size(); ++i) {
        if (!line_assign_[i])
            continue;
        std::size_t j = *line_assign_[i];
        if (j >= target_->line_count())
            throw ShapeMismatch("line assignment target out of range");
        if (!hit.insert(j).second)
            throw ShapeMismatch("two source lines mapped to the same target line");
        if (!same_table(transitions_[i].table(), source_->vars()))
            throw VarTableMismatch("transition lives on the wrong chart");
        if (!transitions_[i].is_unit())
            throw NotAUnit("transition for line '" + source_->line_name(i) +
                           "' is not a unit: " + transitions_[i].render());
    }
}

Factor Factor::identity(ModelPtr model) {
    std::vector<Poly> base;
    for (std::size_t i = 0; i < model->vars()->size(); ++i)
        base.push_back(Poly::variable(model->vars(), i));
    std::vector<std::optional<std::size_t>> assign;
    std::vector<Poly> trans;
    for (std::size_t l = 0; l < model->line_count(); ++l) {
        assign.emplace_back(l);
        trans.push_back(Poly::constant(model->vars(), 1));
    }
    return Factor(model, model, std::move(base), std::move(assign), std::move(trans));
}

DimMap Factor::dim_map() const {
    DimMap out = DimMap::zero(source_->line_count(), target_->line_count());
    for (std::size_t i = 0; i < line_assign_.size(); ++i)
        if (line_assign_[i])
            out.matrix[i][*line_assign_[i]] = 1;
    return out;
}

DimElement pullback(const Factor& f, const DimElement& a) {
    require_same_model(a.model(), f.target(), "pullback");
    // Target lines with no preimage only carry dimension-0 content back.
    std::vector<bool> hit(f.target()->line_count(), false);
    for (const auto& la : f.line_assign())
        if (la)
            hit[*la] = true;
    for (std::size_t j = 0; j < hit.size(); ++j)
        if (!hit[j] && a.dim()[j] != 0)
            throw ShapeMismatch("element has dimension in target line '" +
                                f.target()->line_name(j) + "' which the factor does not reach");

    Poly coeff = a.coeff().substitute_into(f.base_map(), f.source()->vars());
    DimVector out_dim = f.dim_map().apply(a.dim());
    for (std::size_t i = 0; i < f.line_assign().size(); ++i) {
        if (!f.line_assign()[i])
            continue;
        std::int64_t power = a.dim()[*f.line_assign()[i]];
        if (power != 0)
            coeff = coeff * f.transitions()[i].unit_pow(-power);
    }
    return DimElement(f.source(), std::move(out_dim), std::move(coeff));
}

} // namespace dimalg

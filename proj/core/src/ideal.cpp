// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/ideal.hpp"

#include <algorithm>

#include "dimalg/errors.hpp"

namespace dimalg {

CoordIdeal::CoordIdeal(ModelPtr model, std::vector<std::string> vanishing_vars)
    : model_(std::move(model)) {
    for (const auto& name : vanishing_vars) {
        std::size_t i = model_->vars()->require(name);
        if (model_->vars()->is_invertible(i))
            throw InvertibilityViolation("invertible variable '" + name +
                                         "' cannot vanish on a submanifold");
        indices_.push_back(i);
    }
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

std::vector<std::string> CoordIdeal::vanishing_names() const {
    std::vector<std::string> out;
    out.reserve(indices_.size());
    for (std::size_t i : indices_)
        out.push_back(model_->vars()->name(i));
    return out;
}

bool CoordIdeal::vanishes(std::size_t var_index) const {
    return std::binary_search(indices_.begin(), indices_.end(), var_index);
}

bool CoordIdeal::operator==(const CoordIdeal& rhs) const {
    return same_model(model_, rhs.model_) && indices_ == rhs.indices_;
}

bool ideal_membership(const Poly& p, const CoordIdeal& ideal) {
    for (const auto& [e, c] : p.terms()) {
        bool vanishes = false;
        for (std::size_t i : ideal.vanishing_indices()) {
            if (e[i] > 0) {
                vanishes = true;
                break;
            }
        }
        if (!vanishes)
            return false;
    }
    return true;
}

bool ideal_membership(const DimElement& a, const CoordIdeal& ideal) {
    require_same_model(a.model(), ideal.model(), "ideal_membership");
    return ideal_membership(a.coeff(), ideal);
}

Poly quotient_project(const Poly& p, const CoordIdeal& ideal) {
    std::map<std::size_t, Poly> images;
    for (std::size_t i : ideal.vanishing_indices())
        images.emplace(i, Poly::zero(p.table()));
    return p.substitute(images);
}

DimElement quotient_project(const DimElement& a, const CoordIdeal& ideal) {
    require_same_model(a.model(), ideal.model(), "quotient_project");
    return DimElement(a.model(), a.dim(), quotient_project(a.coeff(), ideal));
}

} // namespace dimalg

// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/model.hpp"

#include <set>

#include "dimalg/errors.hpp"

namespace dimalg {

PolyLineModel::PolyLineModel(VarTablePtr vars, std::vector<std::string> lines)
    : vars_(std::move(vars)), lines_(std::move(lines)) {
    std::set<std::string> seen(vars_->names().begin(), vars_->names().end());
    for (const auto& l : lines_) {
        if (l.empty())
            throw Error("line names must be nonempty");
        if (!seen.insert(l).second)
            throw NameClash("line name '" + l + "' clashes with another symbol");
    }
}

std::optional<std::size_t> PolyLineModel::line_index(const std::string& name) const {
    for (std::size_t i = 0; i < lines_.size(); ++i)
        if (lines_[i] == name)
            return i;
    return std::nullopt;
}

ModelPtr make_model(std::vector<std::string> ordinary_vars,
                    std::vector<std::string> invertible_vars,
                    std::vector<std::string> lines) {
    return std::make_shared<PolyLineModel>(
        make_var_table(std::move(ordinary_vars), std::move(invertible_vars)), std::move(lines));
}

ModelPtr make_model(VarTablePtr vars, std::vector<std::string> lines) {
    return std::make_shared<PolyLineModel>(std::move(vars), std::move(lines));
}

bool same_model(const ModelPtr& a, const ModelPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_model(const ModelPtr& a, const ModelPtr& b, const char* op) {
    if (!same_model(a, b))
        throw ModelMismatch(std::string("model mismatch in ") + op);
}

} // namespace dimalg

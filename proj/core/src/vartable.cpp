// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/vartable.hpp"

#include <set>

#include "dimalg/errors.hpp"

namespace dimalg {

VarTable::VarTable(std::vector<std::string> ordinary, std::vector<std::string> invertible)
    : ordinary_count_(ordinary.size()) {
    names_ = std::move(ordinary);
    names_.insert(names_.end(), invertible.begin(), invertible.end());
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw Error("variable names must be nonempty");
        if (!seen.insert(n).second)
            throw NameClash("duplicate variable name '" + n + "'");
    }
}

std::vector<std::string> VarTable::ordinary() const {
    return {names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(ordinary_count_)};
}

std::vector<std::string> VarTable::invertible() const {
    return {names_.begin() + static_cast<std::ptrdiff_t>(ordinary_count_), names_.end()};
}

std::optional<std::size_t> VarTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t VarTable::require(const std::string& name) const {
    auto i = index_of(name);
    if (!i)
        throw UnknownVariable("unknown variable '" + name + "'");
    return *i;
}

VarTablePtr make_var_table(std::vector<std::string> ordinary, std::vector<std::string> invertible) {
    return std::make_shared<VarTable>(std::move(ordinary), std::move(invertible));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace dimalg

// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dimalg {

/// Ordered table of chart coordinates. Ordinary variables admit only
/// non-negative exponents; invertible (Laurent) variables admit any integer
/// exponent. The concatenated order (ordinary first, then invertible) is
/// total and stable and defines the canonical monomial order.
class VarTable {
public:
    VarTable(std::vector<std::string> ordinary, std::vector<std::string> invertible);

    std::size_t size() const { return names_.size(); }
    std::size_t ordinary_count() const { return ordinary_count_; }

    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    bool is_invertible(std::size_t i) const { return i >= ordinary_count_; }

    std::vector<std::string> ordinary() const;
    std::vector<std::string> invertible() const;

    std::optional<std::size_t> index_of(const std::string& name) const;
    /// Like index_of but throws UnknownVariable.
    std::size_t require(const std::string& name) const;

    bool operator==(const VarTable& other) const {
        return names_ == other.names_ && ordinary_count_ == other.ordinary_count_;
    }

private:
    std::vector<std::string> names_;
    std::size_t ordinary_count_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_var_table(std::vector<std::string> ordinary,
                           std::vector<std::string> invertible = {});

/// True when the two tables are the same object or structurally equal.
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

} // namespace dimalg

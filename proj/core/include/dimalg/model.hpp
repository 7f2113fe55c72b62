// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dimalg/vartable.hpp"

namespace dimalg {

/// Trivialized model of a poly-line bundle over a polynomial chart: a chart
/// (the VarTable) plus an ordered list of line names, each carrying a chosen
/// trivializing unit symbol. m = 0 lines means an ordinary polynomial ring.
class PolyLineModel {
public:
    PolyLineModel(VarTablePtr vars, std::vector<std::string> lines);

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<std::string>& lines() const { return lines_; }
    std::size_t line_count() const { return lines_.size(); }
    const std::string& line_name(std::size_t i) const { return lines_.at(i); }
    std::optional<std::size_t> line_index(const std::string& name) const;

    bool operator==(const PolyLineModel& other) const {
        return *vars_ == *other.vars_ && lines_ == other.lines_;
    }

private:
    VarTablePtr vars_;
    std::vector<std::string> lines_;
};

using ModelPtr = std::shared_ptr<const PolyLineModel>;

ModelPtr make_model(std::vector<std::string> ordinary_vars,
                    std::vector<std::string> invertible_vars,
                    std::vector<std::string> lines);
ModelPtr make_model(VarTablePtr vars, std::vector<std::string> lines);

bool same_model(const ModelPtr& a, const ModelPtr& b);
void require_same_model(const ModelPtr& a, const ModelPtr& b, const char* op);

} // namespace dimalg

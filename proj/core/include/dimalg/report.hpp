// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dimalg/bracket.hpp"

namespace dimalg {

/// Outcome of one CLI run. `status` is "pass", "fail" (a mathematical check
/// failed, exit code 1) or "error" (operational problem, exit code 2).
/// The JSON rendering is deterministic: inputs keep insertion order, paths
/// are reduced to basenames and wall-clock timing is excluded, so reports
/// can be pinned as golden files. Timing appears in the human rendering only.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string status = "pass";
    std::string message;                 // error text or summary
    std::vector<CheckResult> checks;     // verification details
    std::string counterexample;          // first witness, when status == "fail"
    std::string result;                  // rendered value for query commands
    std::string emitted;                 // basename of an emitted spec file
    double elapsed_seconds = 0.0;

    void add_input(std::string key, std::string value);
    void set_verify(const VerifyReport& v);

    std::string to_json() const;
    std::string human() const;

    int exit_code() const;
};

} // namespace dimalg

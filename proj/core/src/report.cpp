// Copyright (c) the dimalg authors
// SPDX-License-Identifier: Apache-2.0

#include "dimalg/report.hpp"

#include <json.hpp>

#include <sstream>

namespace dimalg {

void RunReport::add_input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
}

void RunReport::set_verify(const VerifyReport& v) {
    checks = v.checks;
    if (!v.passed) {
        status = "fail";
        const std::string* w = v.first_counterexample();
        counterexample = w ? *w : "";
    }
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs)
        in[k] = v;
    j["inputs"] = in;
    j["status"] = status;
    j["message"] = message;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["count"] = c.count;
        cj["passed"] = c.passed;
        cj["counterexample"] = c.counterexample;
        cs.push_back(std::move(cj));
    }
    j["checks"] = cs;
    j["counterexample"] = counterexample;
    j["result"] = result;
    j["emitted"] = emitted;
    return j.dump(2) + "\n";
}

std::string RunReport::human() const {
    std::ostringstream os;
    os << command << ": " << status << "\n";
    for (const auto& [k, v] : inputs)
        os << "  " << k << " = " << v << "\n";
    if (!message.empty())
        os << "  " << message << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << " (" << c.count
           << " cases)";
        if (!c.passed)
            os << "  counterexample: " << c.counterexample;
        os << "\n";
    }
    if (!result.empty())
        os << "  result: " << result << "\n";
    if (!emitted.empty())
        os << "  emitted: " << emitted << "\n";
    os << "  time: " << elapsed_seconds << "s\n";
    return os.str();
}

int RunReport::exit_code() const {
    if (status == "pass")
        return 0;
    if (status == "fail")
        return 1;
    return 2;
}

} // namespace dimalg

#pragma once

// Built-in verification matrix: five instances covering untwisted one- and
// two-variable loops and the order-2 and order-3 twists, each run through the
// invariant suite with frozen oracle values. The report is deterministic:
// running twice must produce byte-identical text.

#include <string>
#include <vector>

namespace lt {

struct SelftestOptions {
    std::vector<std::string> only;  // instance names to run; empty means all
    bool inject_fault = false;      // corrupt a structure constant first
};

struct SelftestResult {
    std::string report;
    bool all_pass = true;
    bool vacuous = false;  // name filter selected nothing
};

const std::vector<std::string>& selftest_instances();

SelftestResult run_selftest(const SelftestOptions& opt = {});

}  // namespace lt

#pragma once

#include "ainf/model.hpp"
#include "ainf/report.hpp"

namespace ainf {

struct CmdOptions {
    int degree_cap = 0;
    std::optional<int> arity_cap;
    bool strict = true;                // strict re-runs every defect suite
    std::vector<std::string> triple;   // massey inputs, three class expressions
};

/* Dispatch for: transfer, module-transfer, tilde-b, classifying-space,
 * loop-space, massey, twist-transfer, fiber. Every run re-verifies the
 * relevant defect suites and embeds the result; a report with any nonzero
 * defect makes the caller exit with a failure status. */
Report run_command(const std::string& command, const Model& m, const CmdOptions& opt);

const std::vector<std::string>& command_names();

}  // namespace ainf

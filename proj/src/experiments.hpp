#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace atcpg {

// Runs the configured experiment and writes, under cfg.output_dir: one
// trace CSV per run, one summary CSV, and one JSON summary. Returns the
// paths written, summary files first. Throws std::runtime_error when the
// output directory or a file cannot be created.
std::vector<std::string> run_suite(const ExperimentConfig& cfg);

}  // namespace atcpg

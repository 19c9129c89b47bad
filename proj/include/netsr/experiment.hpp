#pragma once

#include <string>

#include <json.hpp>

namespace netsr {

struct ExperimentResult {
    nlohmann::json summary;
    std::string csv;  // long-format rows with a header line
};

/// Batch driver. The spec JSON picks one of three kinds:
///
/// "compare"      - grow targets with one generator and score sets of
///                  networks from other generators against them, per
///                  snapshot ratio.
/// "evolve"       - recover generators for synthetic targets and classify
///                  what came back.
/// "rw_benchmark" - track how well the walker estimates match exact
///                  distances as a network grows, per steps-per-edge
///                  strategy, plus an exact-vs-heuristic growth comparison.
///
/// Unknown kinds or keys are rejected. Zero-run specs yield empty tables.
ExperimentResult run_experiment(const nlohmann::json& spec, int jobs = 1);

}  // namespace netsr

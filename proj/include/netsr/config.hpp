#pragma once

#include <string>

#include "netsr/evolve.hpp"

namespace netsr {

/// Flat `key = value` run configuration. Unknown keys are rejected and every
/// value is range-checked on load. CLI flags override file values.
struct ConfigFile {
    double sampling_ratio = 0.0006;
    double anti_bloat = 0.10;
    int bins = 100;
    int d_min = 2;
    int d_max = 5;
    double p_terminal = 0.4;
    int infinite_distance = 10;
    int stagnation = 1000;
    int rw_steps = 5;
    bool recombination = true;
    double recombination_probability = 0.5;
    double snapshot_tolerance = 0.05;
    double pagerank_alpha = 0.85;
    double pagerank_tolerance = 1e-8;
    int pagerank_max_iterations = 200;
    int sample_floor = 2;
    int null_samples = 30;

    static ConfigFile load(const std::string& path);
    void validate() const;

    MetricsConfig metrics() const;
    GenerationConfig generation() const;  // shape fields left unset
    SearchConfig search() const;
};

}  // namespace netsr

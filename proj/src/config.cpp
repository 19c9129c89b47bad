#include "netsr/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace netsr {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_value(const std::string& key, const std::string& raw) {
    if (raw == "true" || raw == "yes" || raw == "on") return 1.0;
    if (raw == "false" || raw == "no" || raw == "off") return 0.0;
    std::istringstream in(raw);
    double v;
    if (!(in >> v)) throw InputError("config value for '" + key + "' is not a number: " + raw);
    std::string rest;
    if (in >> rest) throw InputError("config value for '" + key + "' has trailing text");
    return v;
}

}  // namespace

ConfigFile ConfigFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    ConfigFile cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line;
        if (auto hash = body.find('#'); hash != std::string::npos) body.resize(hash);
        body = trim(body);
        if (body.empty()) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw InputError("config line " + std::to_string(line_no) + " is not 'key = value'");
        std::string key = trim(body.substr(0, eq));
        double v = parse_value(key, trim(body.substr(eq + 1)));

        if (key == "sampling_ratio") cfg.sampling_ratio = v;
        else if (key == "anti_bloat") cfg.anti_bloat = v;
        else if (key == "bins") cfg.bins = static_cast<int>(v);
        else if (key == "d_min") cfg.d_min = static_cast<int>(v);
        else if (key == "d_max") cfg.d_max = static_cast<int>(v);
        else if (key == "p_terminal") cfg.p_terminal = v;
        else if (key == "infinite_distance") cfg.infinite_distance = static_cast<int>(v);
        else if (key == "stagnation") cfg.stagnation = static_cast<int>(v);
        else if (key == "rw_steps") cfg.rw_steps = static_cast<int>(v);
        else if (key == "recombination") cfg.recombination = v != 0.0;
        else if (key == "recombination_probability") cfg.recombination_probability = v;
        else if (key == "snapshot_tolerance") cfg.snapshot_tolerance = v;
        else if (key == "pagerank_alpha") cfg.pagerank_alpha = v;
        else if (key == "pagerank_tolerance") cfg.pagerank_tolerance = v;
        else if (key == "pagerank_max_iterations") cfg.pagerank_max_iterations = static_cast<int>(v);
        else if (key == "sample_floor") cfg.sample_floor = static_cast<int>(v);
        else if (key == "null_samples") cfg.null_samples = static_cast<int>(v);
        else throw InputError("unknown config key '" + key + "' on line " + std::to_string(line_no));
    }
    cfg.validate();
    return cfg;
}

void ConfigFile::validate() const {
    if (!(sampling_ratio > 0.0 && sampling_ratio <= 1.0))
        throw InputError("sampling_ratio must lie in (0, 1]");
    if (anti_bloat < 0.0) throw InputError("anti_bloat must be non-negative");
    if (bins < 1) throw InputError("bins must be positive");
    if (d_min < 1 || d_min > d_max) throw InputError("need 1 <= d_min <= d_max");
    if (!(p_terminal >= 0.0 && p_terminal <= 1.0)) throw InputError("p_terminal must lie in [0, 1]");
    if (infinite_distance < 1) throw InputError("infinite_distance must be positive");
    if (stagnation < 1) throw InputError("stagnation must be positive");
    if (rw_steps < 1) throw InputError("rw_steps must be positive");
    if (!(recombination_probability >= 0.0 && recombination_probability <= 1.0))
        throw InputError("recombination_probability must lie in [0, 1]");
    if (snapshot_tolerance < 0.0) throw InputError("snapshot_tolerance must be non-negative");
    if (!(pagerank_alpha > 0.0 && pagerank_alpha < 1.0))
        throw InputError("pagerank_alpha must lie in (0, 1)");
    if (!(pagerank_tolerance > 0.0)) throw InputError("pagerank_tolerance must be positive");
    if (pagerank_max_iterations < 1) throw InputError("pagerank_max_iterations must be positive");
    if (sample_floor < 1) throw InputError("sample_floor must be positive");
    if (null_samples < 1) throw InputError("null_samples must be positive");
}

MetricsConfig ConfigFile::metrics() const {
    MetricsConfig m;
    m.bins = bins;
    m.infinite_distance = infinite_distance;
    m.pagerank.alpha = pagerank_alpha;
    m.pagerank.tolerance = pagerank_tolerance;
    m.pagerank.max_iterations = pagerank_max_iterations;
    return m;
}

GenerationConfig ConfigFile::generation() const {
    GenerationConfig g;
    g.sampling_ratio = sampling_ratio;
    g.sample_floor = sample_floor;
    g.rw_steps_per_edge = rw_steps;
    g.infinite_distance = infinite_distance;
    return g;
}

SearchConfig ConfigFile::search() const {
    SearchConfig s;
    s.anti_bloat_tolerance = anti_bloat;
    s.snapshot_tolerance = snapshot_tolerance;
    s.stagnation_window = stagnation;
    s.recombination = recombination;
    s.recombination_probability = recombination_probability;
    s.null_samples = null_samples;
    s.init.d_min = d_min;
    s.init.d_max = d_max;
    s.init.p_terminal = p_terminal;
    s.generation = generation();
    s.metrics = metrics();
    return s;
}

}  // namespace netsr

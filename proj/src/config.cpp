#include "partalg/config.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include "partalg/error.hpp"

namespace partalg {

int Config::effective_threads() const {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Config Config::from_env() {
    Config cfg;
    if (const char* t = std::getenv("PARTALG_THREADS")) {
        int v = std::atoi(t);
        if (v > 0) cfg.threads = v;
    }
    return cfg;
}

Config Config::from_file(const std::string& path) {
    Config cfg = from_env();
    std::ifstream in(path);
    if (!in) fail("range", "cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        long v = std::stol(value);
        if (key == "enumeration_cap")
            cfg.enumeration_cap = static_cast<std::uint64_t>(v);
        else if (key == "potts_capacity")
            cfg.potts_capacity = static_cast<std::uint64_t>(v);
        else if (key == "smith_dim_limit")
            cfg.smith_dim_limit = static_cast<int>(v);
        else if (key == "gram_pipeline_dim_limit")
            cfg.gram_pipeline_dim_limit = static_cast<int>(v);
        else if (key == "threads")
            cfg.threads = static_cast<int>(v);
        else
            fail("range", "unknown config key " + key);
    }
    return cfg;
}

}  // namespace partalg

#ifndef PARTALG_CONFIG_HPP
#define PARTALG_CONFIG_HPP

#include <cstdint>
#include <string>

namespace partalg {

struct Config {
    // Hard cap on the number of set partitions an enumeration may produce.
    std::uint64_t enumeration_cap = 10'000'000;
    // Potts images refuse when Q^n * Q^m exceeds this; commutants when Q^{2n} does.
    std::uint64_t potts_capacity = 1u << 20;
    // Smith forms are only attempted up to this matrix dimension.
    int smith_dim_limit = 16;
    // Gram determinants up to this dimension run the evaluation/interpolation
    // pipeline; larger ones use the verified congruence factorization.
    int gram_pipeline_dim_limit = 64;
    // 0 = use hardware concurrency. Overridden by PARTALG_THREADS.
    int threads = 0;

    int effective_threads() const;

    static Config from_env();                         // applies PARTALG_THREADS
    static Config from_file(const std::string& path); // key=value lines, on top of from_env()
};

}  // namespace partalg

#endif

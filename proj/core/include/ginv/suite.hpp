#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ginv/generate.hpp"
#include "ginv/json_io.hpp"

namespace ginv {

struct SuiteOptions {
    int seed_count = 50;
    std::vector<int> dims = {2, 3, 4};
};

struct SuiteInstance {
    GenSpec spec;
    ClineQuadruple<GaussianRational> quad;
};

struct SuiteCorpus {
    std::vector<SuiteInstance> instances;
    std::vector<GenSpec> failed;  // specs whose generation threw
};

// All five families crossed with opt.dims and seeds 1..seed_count, in that
// fixed order. Instances are replayable one at a time through the generator
// with the same family, dim, and seed.
SuiteCorpus build_corpus(const SuiteOptions& opt);

struct SuiteOutcome {
    Json report;
    bool all_pass = false;
};

// Evaluates every library property over the corpus and returns a
// deterministic report: no timestamps, sorted keys, fixed instance order, so
// identical options yield byte-identical reports.
SuiteOutcome run_suite(const SuiteOptions& opt);

// Same evaluation over a caller-supplied corpus; lets tests feed tampered
// instances and watch the suite catch them.
SuiteOutcome run_suite_on(const SuiteCorpus& corpus, const SuiteOptions& opt);

}  // namespace ginv

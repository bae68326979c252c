#pragma once

#include <cstdint>
#include <vector>

#include "ginv/cline.hpp"

namespace ginv {

// Deterministic recipe for one random quadruple. Identical GenSpec values
// (seed included) always produce bit-identical output on every platform; the
// generator owns its entire random stream.
struct GenSpec {
    ConditionFamily family = ConditionFamily::Classical;
    int dim = 2;
    std::uint64_t seed = 0;
    std::vector<GaussianRational> entry_pool;  // empty means the default pool
    int max_attempts = 10000;
};

// Default draw pool: {-2, -1, -1/2, 0, 1/2, 1, 2}.
const std::vector<GaussianRational>& default_entry_pool();

// splitmix64; used instead of <random> engines because the stream must be
// reproducible across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Every generator checks its own output with check_conditions before
// returning and throws GenerationFailed rather than emitting an invalid or
// silently downgraded instance.
ClineQuadruple<GaussianRational> gen_classical(const GenSpec& spec);
ClineQuadruple<GaussianRational> gen_lian_zeng(const GenSpec& spec);
ClineQuadruple<GaussianRational> gen_miller_zguitti(const GenSpec& spec);
ClineQuadruple<GaussianRational> gen_banach_weak(const GenSpec& spec);
ClineQuadruple<GaussianRational> gen_ring_four(const GenSpec& spec);

// Dispatch on spec.family.
ClineQuadruple<GaussianRational> generate(const GenSpec& spec);

// The built-in 4x4 demo quadruple: a = b = c = superdiagonal-ones shift,
// d = shift with weights (2, 1, 1); declared family banach-weak. Its products
// satisfy (ac)^2 = (db)(ac) = 0 and (db)^2 = (ac)(db) = 0 while acd != dbd.
ClineQuadruple<GaussianRational> example_3_7();

}  // namespace ginv

#pragma once

#include <cstdint>

#include "rsse/decoder.hpp"

namespace rsse {

// Counter-based per-trial stream: trial i draws from a splitmix64 sequence
// whose state is mix(master_seed) xor mix(i+1). Identical (seed, trial)
// pairs give identical draws regardless of how trials are distributed
// across workers.
class TrialRng {
public:
    TrialRng(uint64_t master_seed, uint64_t trial_index);

    uint64_t next();
    // Uniform in [0, bound), bound >= 1, by rejection.
    uint64_t below(uint64_t bound);
    // Uniform double in [0, 1).
    double uniform();

private:
    uint64_t state_;
};

// Each symbol independently: kept with probability 1-p, otherwise replaced
// by one of the q-1 other symbols uniformly.
Word qsc_corrupt(const Field& f, const Word& word, double p, TrialRng& rng);

// Uniform random t-subset support, values uniform over the q-1 nonzero
// elements.
Word fixed_weight_error(const Field& f, unsigned n, unsigned t, TrialRng& rng);

enum class DecoderKind { extended, bmd };

struct TrialReport {
    uint64_t trials = 0;
    uint64_t n_correct = 0;
    uint64_t n_error = 0;    // Success with a wrong codeword
    uint64_t n_failure = 0;  // decoding failure
    uint64_t master_seed = 0;
    double wall_seconds = 0;

    double rate_correct() const { return double(n_correct) / trials; }
    double rate_error() const { return double(n_error) / trials; }
    double rate_failure() const { return double(n_failure) / trials; }
    double rate_word_error() const { return double(n_error + n_failure) / trials; }
};

// Wilson score interval for count successes out of n at confidence z
// (z = 1.96 for 95%).
struct Interval {
    double low;
    double high;
};
Interval wilson_interval(uint64_t count, uint64_t n, double z = 1.96);

struct McOptions {
    unsigned workers = 0;        // 0 = hardware concurrency
    bool zero_codeword = false;  // fix the all-zero codeword instead of
                                 // drawing uniform random information words
};

// Fixed-weight-t error ensemble: per trial draw a codeword, add a random
// weight-t error, decode, classify. Deterministic given master_seed.
TrialReport mc_fixed_weight(const RsCode& code, DecoderKind kind, unsigned t,
                            uint64_t trials, uint64_t master_seed,
                            const McOptions& opts = {});

// QSC ensemble with crossover probability p.
TrialReport mc_qsc(const RsCode& code, DecoderKind kind, double p,
                   uint64_t trials, uint64_t master_seed,
                   const McOptions& opts = {});

}  // namespace rsse

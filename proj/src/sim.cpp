#include "rsse/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace rsse {

namespace {

// splitmix64 finalizer (Steele, Lea, Flood / Stafford mix13).
uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(uint64_t master_seed, uint64_t trial_index)
    : state_(mix64(master_seed) ^ mix64(trial_index + 1)) {}

uint64_t TrialRng::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t TrialRng::below(uint64_t bound) {
    // rejection from the top to avoid modulo bias
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

double TrialRng::uniform() { return (next() >> 11) * 0x1.0p-53; }

Word qsc_corrupt(const Field& f, const Word& word, double p, TrialRng& rng) {
    Word out(word);
    const uint32_t q = f.q();
    for (Elem& y : out) {
        if (rng.uniform() >= p) continue;
        uint64_t r = rng.below(q - 1);  // uniform over the q-1 other symbols
        y = static_cast<Elem>(r < y ? r : r + 1);
    }
    return out;
}

Word fixed_weight_error(const Field& f, unsigned n, unsigned t, TrialRng& rng) {
    if (t > n) throw std::invalid_argument("sim: error weight exceeds length");
    Word e(n, 0);
    // partial Fisher-Yates over the position array
    std::vector<unsigned> pos(n);
    for (unsigned i = 0; i < n; ++i) pos[i] = i;
    for (unsigned i = 0; i < t; ++i) {
        unsigned j = i + static_cast<unsigned>(rng.below(n - i));
        std::swap(pos[i], pos[j]);
        e[pos[i]] = static_cast<Elem>(1 + rng.below(f.q() - 1));
    }
    return e;
}

namespace {

struct Counts {
    uint64_t correct = 0, error = 0, failure = 0;
};

template <typename TrialFn>
TrialReport run_trials(uint64_t trials, uint64_t master_seed, unsigned workers,
                       TrialFn&& trial) {
    auto start = std::chrono::steady_clock::now();
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<uint64_t>(workers, trials));

    std::vector<Counts> parts(workers);
    auto work = [&](unsigned w) {
        uint64_t lo = trials * w / workers, hi = trials * (w + 1) / workers;
        Counts c;
        for (uint64_t i = lo; i < hi; ++i) {
            TrialRng rng(master_seed, i);
            switch (trial(rng)) {
                case 0: ++c.correct; break;
                case 1: ++c.error; break;
                default: ++c.failure; break;
            }
        }
        parts[w] = c;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    TrialReport r;
    r.trials = trials;
    r.master_seed = master_seed;
    for (const Counts& c : parts) {
        r.n_correct += c.correct;
        r.n_error += c.error;
        r.n_failure += c.failure;
    }
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return r;
}

Word random_codeword(const RsCode& code, TrialRng& rng, bool zero_codeword) {
    if (zero_codeword) return Word(code.n, 0);
    Word info(code.k);
    for (Elem& c : info) c = static_cast<Elem>(rng.below(code.field.q()));
    return encode(code, info);
}

int classify(const RsCode& code, DecoderKind kind, const Word& sent,
             const Word& received) {
    DecodeResult res = kind == DecoderKind::extended ? decode(code, received)
                                                     : bmd_decode(code, received);
    if (!res.ok) return 2;
    return res.codeword == sent ? 0 : 1;
}

}  // namespace

Interval wilson_interval(uint64_t count, uint64_t n, double z) {
    if (n == 0) return {0.0, 1.0};
    double phat = double(count) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = phat + z2 / (2.0 * n);
    double spread = z * std::sqrt(phat * (1 - phat) / n + z2 / (4.0 * n * n));
    return {std::max(0.0, (center - spread) / denom),
            std::min(1.0, (center + spread) / denom)};
}

TrialReport mc_fixed_weight(const RsCode& code, DecoderKind kind, unsigned t,
                            uint64_t trials, uint64_t master_seed,
                            const McOptions& opts) {
    if (trials < 1) throw std::invalid_argument("sim: need at least one trial");
    return run_trials(trials, master_seed, opts.workers, [&](TrialRng& rng) {
        Word c = random_codeword(code, rng, opts.zero_codeword);
        Word e = fixed_weight_error(code.field, code.n, t, rng);
        Word y(code.n);
        for (unsigned j = 0; j < code.n; ++j) y[j] = code.field.add(c[j], e[j]);
        return classify(code, kind, c, y);
    });
}

TrialReport mc_qsc(const RsCode& code, DecoderKind kind, double p,
                   uint64_t trials, uint64_t master_seed,
                   const McOptions& opts) {
    if (trials < 1) throw std::invalid_argument("sim: need at least one trial");
    if (p < 0 || p > 1) throw std::invalid_argument("sim: p out of range");
    return run_trials(trials, master_seed, opts.workers, [&](TrialRng& rng) {
        Word c = random_codeword(code, rng, opts.zero_codeword);
        Word y = qsc_corrupt(code.field, c, p, rng);
        return classify(code, kind, c, y);
    });
}

}  // namespace rsse

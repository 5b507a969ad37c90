#pragma once

#include "rsse/rs.hpp"
#include "rsse/shiftreg.hpp"

namespace rsse {

// Largest usable decoding radius with l syndrome sequences:
// floor((2ln - l(l+1)k + l(l-1)) / (2(l+1))). l = 1 gives floor((n-k)/2).
long t_max_l(unsigned n, unsigned k, unsigned l);

// Largest l >= 1 such that t_max^{[l-1]} + 2 <= n - l(k-1) - 1 (and
// l(k-1)+1 <= n). l = 1 is always admissible.
unsigned select_l(unsigned n, unsigned k);

// Closed-form threshold rate R_th^{(l)} = 2/(l(l+1)) + (l^2-3l-2)/(n l(l+1)),
// an approximation with the floor dropped. Requires l >= 2.
struct Ratio {
    long long num;
    long long den;
    double value() const { return static_cast<double>(num) / den; }
};
Ratio threshold_rate(unsigned n, unsigned l);

// Closed-form lower bound on select_l (floor dropped upstream); exact
// select_l may exceed it for small lengths. Requires k >= 2.
unsigned l_closed_form(unsigned n, unsigned k);

struct DecoderParams {
    unsigned l;
    unsigned t_max;
    unsigned tau;
};
DecoderParams decoder_params(const RsCode& code);

// Error positions j with Lambda(alpha^{-j}) = 0, 0 <= j < n.
std::vector<unsigned> locator_roots(const RsCode& code, const Word& lambda);

// Degree t with exactly t distinct roots, all of locator form alpha^{-j}.
bool is_t_valid(const RsCode& code, const Word& lambda, unsigned t);

// Recursive extension: completes the error spectrum from the literal
// syndrome window E_k..E_{n-1} = S^[1] via E_j = -sum_h Lambda_h E_{j-h}
// (indices mod n), then returns e = idft(E).
Word evaluate_errors(const RsCode& code, const Word& s1, const Word& lambda,
                     unsigned t);

enum class FailureReason {
    not_t_valid,
    t_exceeds_radius,
    support_mismatch,
    residual_not_codeword,
};
const char* to_string(FailureReason r);

struct DecodeResult {
    bool ok = false;
    Word codeword;
    Word error;
    unsigned t = 0;
    FailureReason reason = FailureReason::not_t_valid;

    static DecodeResult success(Word c, Word e, unsigned t);
    static DecodeResult failure(FailureReason r);
};

// The syndrome-extension decoder: virtual rows, multi-sequence synthesis,
// t-validity gate, recursive-extension evaluation. Corrects every pattern
// of weight <= tau and decodes up to t_max^{[l]} with small failure
// probability; never returns a non-codeword.
DecodeResult decode(const RsCode& code, const Word& y);

// Classical bounded-minimum-distance baseline (single-sequence
// Berlekamp-Massey, radius tau).
DecodeResult bmd_decode(const RsCode& code, const Word& y);

}  // namespace rsse

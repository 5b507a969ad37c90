#pragma once

#include <gmpxx.h>

#include <string>

#include "rsse/decoder.hpp"

namespace rsse {

// Nonnegative probability as an exact rational. The failure/error bounds
// span hundreds of orders of magnitude, far below any hardware float.
class BigProb {
public:
    BigProb() : v_(0) {}
    explicit BigProb(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    // log10 of the value; -inf for zero.
    double log10() const;
    // Decimal scientific notation, e.g. "8.123456e-02".
    std::string to_sci(int sig_digits = 6) const;

    BigProb operator+(const BigProb& o) const { return BigProb(v_ + o.v_); }
    bool operator<(const BigProb& o) const { return v_ < o.v_; }
    bool operator<=(const BigProb& o) const { return v_ <= o.v_; }

private:
    mpq_class v_;
};

// Number of weight-r2 vectors in F_q^n at Hamming distance exactly rho
// from a fixed weight-r1 vector. Out-of-range binomials contribute 0.
mpz_class u_q(unsigned r2, unsigned r1, unsigned rho, unsigned n, unsigned q);

// Upper bound on the probability of decoding a wrong codeword for a
// weight-t error (exact evaluation of the double sum over the MDS weight
// distribution).
BigProb p_e_bound(const RsCode& code, const DecoderParams& params, unsigned t);

// Upper bound on the decoding-failure probability for a weight-t error:
// gamma^t * q^{-3(t_max - t)} / (q-1). Proven only for l = 2 over
// characteristic 2; throws std::domain_error otherwise.
BigProb p_f_bound(const RsCode& code, const DecoderParams& params, unsigned t);

// Combined per-weight bound: 0 for t <= tau, min{Pe+Pf, 1} for
// tau < t <= t_max, 1 beyond the radius.
BigProb p_w_t(const RsCode& code, const DecoderParams& params, unsigned t);

// Word-error bound on the q-ary symmetric channel with crossover
// probability p (exact rational in [0,1]).
BigProb p_w_qsc(const RsCode& code, const DecoderParams& params,
                const mpq_class& p);

}  // namespace rsse

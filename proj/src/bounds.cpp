#include "rsse/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rsse {

namespace {

double log10_mpz(const mpz_class& z) {
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log10(d) + exp2 * std::log10(2.0);
}

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class ipow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

double BigProb::log10() const {
    if (v_ == 0) return -std::numeric_limits<double>::infinity();
    return log10_mpz(v_.get_num()) - log10_mpz(v_.get_den());
}

std::string BigProb::to_sci(int sig_digits) const {
    if (v_ == 0) {
        std::string s = "0.";
        s.append(sig_digits - 1, '0');
        return s + "e+00";
    }
    long e10 = static_cast<long>(std::floor(log10()));
    // digits = round(v * 10^{sig-1-e10}), adjusted if the float estimate of
    // the exponent was off by one.
    auto scaled = [&](long e) {
        mpq_class s = v_;
        long shift = sig_digits - 1 - e;
        if (shift >= 0)
            s *= ipow(10, shift);
        else
            s /= ipow(10, -shift);
        mpz_class num2 = s.get_num() * 2 + s.get_den();
        mpz_class digits = num2 / (s.get_den() * 2);  // round half up
        return digits;
    };
    mpz_class digits = scaled(e10);
    mpz_class lo = ipow(10, sig_digits - 1), hi = ipow(10, sig_digits);
    while (digits >= hi) {
        ++e10;
        digits = scaled(e10);
    }
    while (digits < lo) {
        --e10;
        digits = scaled(e10);
    }
    std::string ds = digits.get_str();
    std::string mant = ds.substr(0, 1) + "." + ds.substr(1);
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+03ld", e10);
    return mant + buf;
}

mpz_class u_q(unsigned r2, unsigned r1, unsigned rho, unsigned n, unsigned q) {
    mpz_class sum = 0;
    const long upper = static_cast<long>(r1) + r2 - rho;
    if (upper < 0) return 0;
    long lower = (upper + 1) / 2;  // ceil((r1+r2-rho)/2)
    if (lower < 0) lower = 0;
    for (long i = lower; i <= upper; ++i) {
        long j = static_cast<long>(rho) - (static_cast<long>(r1) + r2) + 2 * i;
        if (i > static_cast<long>(r1)) continue;
        if (j < 0 || j > i) continue;
        if (i > static_cast<long>(r2)) continue;  // C(n-r1, r2-i) needs r2-i >= 0
        if (r2 - i > n - r1) continue;
        mpz_class term = binom(r1, i) * binom(i, j) * binom(n - r1, r2 - i);
        term *= ipow(q - 2, j);
        term *= ipow(q - 1, r2 - i);
        sum += term;
    }
    return sum;
}

BigProb p_e_bound(const RsCode& code, const DecoderParams& params, unsigned t) {
    const unsigned q = code.field.q(), n = code.n;
    mpz_class num = 0;
    const unsigned wmax = std::min(t + params.t_max, n);
    const unsigned rho_max = std::min(t, params.t_max);
    for (unsigned w = code.d; w <= wmax; ++w) {
        mpz_class inner = 0;
        for (unsigned rho = 0; rho <= rho_max; ++rho)
            inner += u_q(t, w, rho, n, q);
        num += weight_distribution(code, w) * inner;
    }
    mpz_class den = binom(n, t) * ipow(q - 1, t);
    return BigProb(mpq_class(num, den));
}

BigProb p_f_bound(const RsCode& code, const DecoderParams& params, unsigned t) {
    if (params.l != 2)
        throw std::domain_error("bounds: no analytical failure bound for l != 2");
    if (t <= params.tau || t > params.t_max)
        throw std::domain_error("bounds: failure bound needs tau < t <= t_max");
    const unsigned q = code.field.q();
    mpq_class gamma = mpq_class(q, q - 1) + mpq_class(1, q);
    mpq_class g = 1;
    for (unsigned i = 0; i < t; ++i) g *= gamma;
    mpq_class r = g / ipow(q, 3 * (params.t_max - t)) / (q - 1);
    return BigProb(r);
}

BigProb p_w_t(const RsCode& code, const DecoderParams& params, unsigned t) {
    if (t <= params.tau) return BigProb();
    if (t > params.t_max) return BigProb(mpq_class(1));
    mpq_class s = p_e_bound(code, params, t).value() +
                  p_f_bound(code, params, t).value();
    if (s > 1) s = 1;
    return BigProb(s);
}

BigProb p_w_qsc(const RsCode& code, const DecoderParams& params,
                const mpq_class& p) {
    if (p < 0 || p > 1)
        throw std::invalid_argument("bounds: crossover probability out of range");
    mpq_class sum = 0;
    const unsigned n = code.n;
    for (unsigned t = params.tau + 1; t <= n; ++t) {
        BigProb pw = p_w_t(code, params, t);
        if (pw.is_zero()) continue;
        mpq_class pt = 1, qt = 1;
        for (unsigned i = 0; i < t; ++i) pt *= p;
        for (unsigned i = 0; i < n - t; ++i) qt *= (1 - p);
        sum += binom(n, t) * pw.value() * pt * qt;
    }
    return BigProb(sum);
}

}  // namespace rsse

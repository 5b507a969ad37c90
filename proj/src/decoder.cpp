#include "rsse/decoder.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rsse {

long t_max_l(unsigned n, unsigned k, unsigned l) {
    if (l < 1 || static_cast<unsigned long>(l) * (k - 1) + 1 > n)
        throw std::invalid_argument("decoder: l(k-1)+1 <= n violated");
    const long ln = l, nn = n, kk = k;
    return (2 * ln * nn - ln * (ln + 1) * kk + ln * (ln - 1)) / (2 * (ln + 1));
}

unsigned select_l(unsigned n, unsigned k) {
    unsigned l = 1;
    while (true) {
        unsigned cand = l + 1;
        if (static_cast<unsigned long>(cand) * (k - 1) + 1 > n) break;
        long rhs = static_cast<long>(n) - static_cast<long>(cand) * (k - 1) - 1;
        if (t_max_l(n, k, cand - 1) + 2 > rhs) break;
        l = cand;
    }
    return l;
}

Ratio threshold_rate(unsigned n, unsigned l) {
    if (l < 2) throw std::invalid_argument("decoder: threshold rate needs l >= 2");
    // 2/(l(l+1)) + (l^2-3l-2)/(n l(l+1)) over the common denominator n l(l+1)
    const long long ll = l;
    long long den = static_cast<long long>(n) * ll * (ll + 1);
    long long num = 2 * static_cast<long long>(n) + (ll * ll - 3 * ll - 2);
    long long g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

unsigned l_closed_form(unsigned n, unsigned k) {
    if (k < 2) throw std::invalid_argument("decoder: closed form needs k >= 2");
    const double kk = k, nn = n;
    double root = std::sqrt((kk + 3) * (kk + 3) + 8 * (kk - 1) * (nn - 1));
    return static_cast<unsigned>((root - (kk + 3)) / (2 * (kk - 1)));
}

DecoderParams decoder_params(const RsCode& code) {
    unsigned l = select_l(code.n, code.k);
    return {l, static_cast<unsigned>(t_max_l(code.n, code.k, l)), code.tau};
}

std::vector<unsigned> locator_roots(const RsCode& code, const Word& lambda) {
    const Field& f = code.field;
    std::vector<unsigned> roots;
    for (unsigned j = 0; j < code.n; ++j) {
        // Horner at alpha^{-j}
        Elem x = f.inv(f.pow(code.alpha, j));
        Elem v = 0;
        for (size_t i = lambda.size(); i-- > 0;)
            v = f.add(f.mul(v, x), lambda[i]);
        if (v == 0) roots.push_back(j);
    }
    return roots;
}

bool is_t_valid(const RsCode& code, const Word& lambda, unsigned t) {
    if (lambda.empty() || lambda[0] != 1) return false;
    if (degree(lambda) != static_cast<int>(t)) return false;
    if (t == 0) return true;
    // A degree-t polynomial with t roots among the n distinct locator
    // values has exactly t distinct roots, all of the required form.
    return locator_roots(code, lambda).size() == t;
}

Word evaluate_errors(const RsCode& code, const Word& s1, const Word& lambda,
                     unsigned t) {
    const Field& f = code.field;
    const unsigned n = code.n, k = code.k;
    if (s1.size() != n - k)
        throw std::invalid_argument("decoder: syndrome window length mismatch");
    Word E(n, 0);
    for (unsigned j = k; j < n; ++j) E[j] = s1[j - k];
    for (unsigned j = 0; j < k; ++j) {
        Elem v = 0;
        for (unsigned h = 1; h <= t && h < lambda.size(); ++h)
            v = f.add(v, f.mul(lambda[h], E[(j + n - h) % n]));
        E[j] = v;  // characteristic 2: -v = v
    }
    return idft(f, E, code.alpha, n);
}

const char* to_string(FailureReason r) {
    switch (r) {
        case FailureReason::not_t_valid: return "not_t_valid";
        case FailureReason::t_exceeds_radius: return "t_exceeds_radius";
        case FailureReason::support_mismatch: return "support_mismatch";
        case FailureReason::residual_not_codeword: return "residual_not_codeword";
    }
    return "unknown";
}

DecodeResult DecodeResult::success(Word c, Word e, unsigned t) {
    DecodeResult r;
    r.ok = true;
    r.codeword = std::move(c);
    r.error = std::move(e);
    r.t = t;
    return r;
}

DecodeResult DecodeResult::failure(FailureReason reason) {
    DecodeResult r;
    r.ok = false;
    r.reason = reason;
    return r;
}

namespace {

DecodeResult finish(const RsCode& code, const Word& y, const Word& s1,
                    const ConnectionPoly& cp, unsigned radius) {
    if (cp.t > radius)
        return DecodeResult::failure(FailureReason::t_exceeds_radius);
    if (cp.lambda.empty() || cp.lambda[0] != 1 ||
        degree(cp.lambda) != static_cast<int>(cp.t))
        return DecodeResult::failure(FailureReason::not_t_valid);
    std::vector<unsigned> roots = locator_roots(code, cp.lambda);
    if (roots.size() != cp.t)
        return DecodeResult::failure(FailureReason::not_t_valid);

    Word e = evaluate_errors(code, s1, cp.lambda, cp.t);
    std::vector<unsigned> supp;
    for (unsigned j = 0; j < code.n; ++j)
        if (e[j] != 0) supp.push_back(j);
    if (supp != roots)
        return DecodeResult::failure(FailureReason::support_mismatch);

    Word c(code.n);
    for (unsigned j = 0; j < code.n; ++j) c[j] = code.field.sub(y[j], e[j]);
    if (!is_codeword(code, c))
        return DecodeResult::failure(FailureReason::residual_not_codeword);
    return DecodeResult::success(std::move(c), std::move(e), cp.t);
}

}  // namespace

DecodeResult decode(const RsCode& code, const Word& y) {
    if (y.size() != code.n)
        throw std::invalid_argument("decoder: word length mismatch");
    DecoderParams p = decoder_params(code);
    SyndromeSet s = syndromes(code, y, p.l);
    ConnectionPoly cp = synthesize(code.field, s);
    return finish(code, y, s[0], cp, p.t_max);
}

DecodeResult bmd_decode(const RsCode& code, const Word& y) {
    if (y.size() != code.n)
        throw std::invalid_argument("decoder: word length mismatch");
    SyndromeSet s = syndromes(code, y, 1);
    ConnectionPoly cp = berlekamp_massey(code.field, s[0]);
    return finish(code, y, s[0], cp, code.tau);
}

}  // namespace rsse

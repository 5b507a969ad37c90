#include "rsse/dft.hpp"

#include <stdexcept>

namespace rsse {

namespace {

// Evaluate P_i = p(beta^i) for i = lo..n-1 where beta has order n,
// working in the log domain with exponents stepped mod n.
Word eval_points(const Field& f, const Word& p, Elem beta, unsigned n,
                 unsigned lo, Elem scale) {
    const uint32_t qm1 = f.q() - 1;
    const uint32_t lb = f.log(beta);

    std::vector<uint32_t> step(n);  // step[r] = log(beta^r)
    for (unsigned r = 0; r < n; ++r)
        step[r] = static_cast<uint32_t>((static_cast<uint64_t>(lb) * r) % qm1);

    const size_t len = std::min<size_t>(p.size(), n);
    std::vector<uint32_t> lp(len);
    for (size_t j = 0; j < len; ++j) lp[j] = f.raw_log(p[j]);

    Word out(n - lo, 0);
    for (unsigned i = lo; i < n; ++i) {
        Elem acc = 0;
        uint32_t e = 0;  // i*j mod n
        for (size_t j = 0; j < len; ++j) {
            acc ^= f.exp_at(lp[j] + step[e]);
            e += i;
            if (e >= n) e -= n;
        }
        out[i - lo] = f.mul(acc, scale);
    }
    return out;
}

}  // namespace

Word dft(const Field& f, const Word& p, Elem alpha, unsigned n) {
    if (f.order(alpha) != n)
        throw std::invalid_argument("dft: alpha does not have order n");
    if (degree(p) >= static_cast<int>(n))
        throw std::invalid_argument("dft: deg(p) > n-1");
    return eval_points(f, p, alpha, n, 0, 1);
}

Word idft(const Field& f, const Word& P, Elem alpha, unsigned n) {
    if (f.order(alpha) != n)
        throw std::invalid_argument("idft: alpha does not have order n");
    if (degree(P) >= static_cast<int>(n))
        throw std::invalid_argument("idft: deg(P) > n-1");
    if (n % 2 == 0)
        throw std::domain_error("idft: n not invertible in characteristic 2");
    // n odd: the sum of n ones is 1, so n^{-1} = 1.
    return eval_points(f, P, f.inv(alpha), n, 0, 1);
}

Word dft_tail(const Field& f, const Word& p, Elem alpha, unsigned n, unsigned lo) {
    return eval_points(f, p, alpha, n, lo, 1);
}

}  // namespace rsse

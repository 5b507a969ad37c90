#include "rsse/gf.hpp"

#include <numeric>
#include <stdexcept>

namespace rsse {

namespace {

// Conventional primitive polynomials, one per extension degree.
uint32_t default_poly(unsigned m) {
    switch (m) {
        case 2: return 0b111;                 // x^2+x+1
        case 3: return 0b1011;                // x^3+x+1
        case 4: return 0b10011;               // x^4+x+1
        case 5: return 0b100101;              // x^5+x^2+1
        case 6: return 0b1000011;             // x^6+x+1
        case 7: return 0b10001001;            // x^7+x^3+1
        case 8: return 0b100011101;           // x^8+x^4+x^3+x^2+1
        case 9: return 0b1000010001;          // x^9+x^4+1
        case 10: return 0b10000001001;        // x^10+x^3+1
        case 11: return 0b100000000101;       // x^11+x^2+1
        case 12: return 0b1000001010011;      // x^12+x^6+x^4+x+1
        case 13: return 0b10000000011011;     // x^13+x^4+x^3+x+1
        case 14: return 0b100010001000011;    // x^14+x^10+x^6+x+1
        case 15: return 0b1000000000000011;   // x^15+x+1
        case 16: return 0b10001000000001011;  // x^16+x^12+x^3+x+1
        default: throw std::invalid_argument("gf: no default polynomial for m");
    }
}

}  // namespace

Field::Field(unsigned m, uint32_t prim_poly) : m_(m) {
    if (m < 2 || m > 16)
        throw std::invalid_argument("gf: extension degree must be in [2,16]");
    q_ = 1u << m;
    poly_ = prim_poly ? prim_poly : default_poly(m);
    if (poly_ >> m != 1u)
        throw std::invalid_argument("gf: polynomial degree must equal m");

    const uint32_t qm1 = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(4 * qm1 + 1, 0);

    // Walk x^0, x^1, ... reducing by the defining polynomial. The walk must
    // return to 1 after exactly q-1 steps and visit every nonzero element;
    // otherwise the polynomial is reducible or merely irreducible but not
    // primitive.
    std::vector<bool> seen(q_, false);
    uint32_t v = 1;
    for (uint32_t i = 0; i < qm1; ++i) {
        if (v == 1 && i != 0)
            throw std::invalid_argument("gf: polynomial is not primitive");
        if (seen[v])
            throw std::invalid_argument("gf: polynomial is not primitive");
        seen[v] = true;
        exp_[i] = static_cast<Elem>(v);
        exp_[i + qm1] = static_cast<Elem>(v);
        log_[v] = i;
        v <<= 1;
        if (v & q_) v ^= poly_;
    }
    if (v != 1)
        throw std::invalid_argument("gf: polynomial is not primitive");
    log_[0] = zero_log();
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("gf: inverse of zero");
    const uint32_t qm1 = q_ - 1;
    return exp_[(qm1 - log_[a]) % qm1];
}

Elem Field::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("gf: negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const long long qm1 = q_ - 1;
    long long r = ((e % qm1) + qm1) % qm1;
    return exp_[(log_[a] * static_cast<uint64_t>(r)) % qm1];
}

uint32_t Field::log(Elem a) const {
    if (a == 0) throw std::domain_error("gf: log of zero");
    return log_[a];
}

unsigned Field::order(Elem a) const {
    if (a == 0) throw std::domain_error("gf: order of zero");
    const uint32_t qm1 = q_ - 1;
    uint32_t g = std::gcd(log_[a], qm1);
    return qm1 / g;  // 1 has log 0, gcd(0, qm1) = qm1, order 1
}

Elem Field::root_of_unity(unsigned n) const {
    const uint32_t qm1 = q_ - 1;
    if (n == 0 || qm1 % n != 0)
        throw std::invalid_argument("gf: n does not divide q-1");
    return exp_[qm1 / n];
}

}  // namespace rsse

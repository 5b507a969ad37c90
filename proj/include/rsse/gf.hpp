#pragma once

#include <cstdint>
#include <vector>

namespace rsse {

using Elem = uint16_t;

// Arithmetic context for GF(2^m), 2 <= m <= 16, with log/antilog tables.
// Immutable after construction; all operations are pure and thread-safe.
class Field {
public:
    // prim_poly = 0 selects a built-in default primitive polynomial for m.
    // Throws std::invalid_argument if the polynomial is reducible or not
    // primitive (x must generate all q-1 nonzero elements).
    explicit Field(unsigned m, uint32_t prim_poly = 0);

    unsigned m() const { return m_; }
    uint32_t q() const { return q_; }
    uint32_t prim_poly() const { return poly_; }

    Elem add(Elem a, Elem b) const { return a ^ b; }
    Elem sub(Elem a, Elem b) const { return a ^ b; }

    // Branch-free table multiply: log_[0] is a sentinel that lands the sum
    // in the zero-padded region of exp_.
    Elem mul(Elem a, Elem b) const { return exp_[log_[a] + log_[b]]; }

    Elem inv(Elem a) const;           // throws on a == 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;

    // Discrete log of a nonzero element with respect to the generator x.
    uint32_t log(Elem a) const;
    Elem alpha_pow(uint32_t e) const { return exp_[e % (q_ - 1)]; }

    // Multiplicative order of a nonzero element; divides q-1.
    unsigned order(Elem a) const;

    // x^((q-1)/n), an element of order exactly n. Throws if n does not
    // divide q-1.
    Elem root_of_unity(unsigned n) const;

    // Raw log value, sentinel 2(q-1) for zero. Used by hot loops that do
    // their own exponent bookkeeping.
    uint32_t raw_log(Elem a) const { return log_[a]; }
    Elem exp_at(uint32_t idx) const { return exp_[idx]; }
    uint32_t zero_log() const { return 2 * (q_ - 1); }

private:
    unsigned m_;
    uint32_t q_;
    uint32_t poly_;
    std::vector<uint32_t> log_;   // size q; log_[0] = 2(q-1)
    std::vector<Elem> exp_;       // size 4(q-1)+1; zero beyond 2(q-1)-2
};

}  // namespace rsse

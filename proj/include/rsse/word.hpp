#pragma once

#include <vector>

#include "rsse/gf.hpp"

namespace rsse {

// A word over the field doubles as a polynomial: index i is the
// coefficient of x^i.
using Word = std::vector<Elem>;

// Highest index with a nonzero coefficient; -1 marks the zero polynomial
// (the "minus infinity" degree).
inline int degree(const Word& w) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i)
        if (w[i] != 0) return i;
    return -1;
}

inline int weight(const Word& w) {
    int t = 0;
    for (Elem c : w) t += (c != 0);
    return t;
}

inline Word add(const Field& f, const Word& a, const Word& b) {
    Word r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    return r;
}

}  // namespace rsse

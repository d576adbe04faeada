#pragma once

namespace blobtilt {

// [k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}; [0]_q = 0 and [-k]_q = -[k]_q.
// Works over any ring type with pow/+=/unary- in which q is invertible.
template <class T>
T qnum(long k, const T& q) {
    if (k < 0) return -qnum(-k, q);
    T out = q.pow(0);  // one
    out -= out;        // zero of the right ring
    for (long e = k - 1; e >= 1 - k; e -= 2) out += q.pow(e);
    return out;
}

}  // namespace blobtilt

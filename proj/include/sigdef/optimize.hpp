#pragma once

#include <cmath>

namespace sigdef {

template <typename Scalar>
struct ScalarMaximum {
    Scalar argmax;
    Scalar value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi], to |dx| < tol.
template <typename Scalar, typename F>
ScalarMaximum<Scalar> golden_section_maximize(F&& f, Scalar lo, Scalar hi, Scalar tol) {
    const Scalar inv_phi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
    Scalar c = hi - inv_phi * (hi - lo);
    Scalar d = lo + inv_phi * (hi - lo);
    Scalar fc = f(c);
    Scalar fd = f(d);
    while (hi - lo > tol) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    // The bracket never evaluates the interval endpoints themselves.
    ScalarMaximum<Scalar> best{(lo + hi) / Scalar(2), f((lo + hi) / Scalar(2))};
    for (const Scalar x : {lo, hi}) {
        const Scalar fx = f(x);
        if (fx > best.value) best = {x, fx};
    }
    return best;
}

/// Maximum of f over n evenly spaced points of [lo, hi] (n >= 2).
template <typename Scalar, typename F>
ScalarMaximum<Scalar> grid_maximize(F&& f, Scalar lo, Scalar hi, int n) {
    ScalarMaximum<Scalar> best{lo, f(lo)};
    for (int i = 1; i < n; ++i) {
        const Scalar x = lo + (hi - lo) * Scalar(i) / Scalar(n - 1);
        const Scalar fx = f(x);
        if (fx > best.value) best = {x, fx};
    }
    return best;
}

}  // namespace sigdef

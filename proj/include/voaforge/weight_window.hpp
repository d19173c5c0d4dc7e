#pragma once

#include "voaforge/rat.hpp"
#include "voaforge/report.hpp"

#include <string>
#include <vector>

namespace voaforge {

/** Window of the lowest-weight space spanned by theta_{1,b'} with b' = b + offset. */
struct OmegaWindow {
    long p = 2;
    long r = 1;
    long s = 1;
    Rat b;
    long lo = -3;
    long hi = 3;

    Rat level() const;
    Rat bprime(long offset) const { return b + Rat(offset); }
    bool contains(long offset) const { return offset >= lo && offset <= hi; }
};

struct ActResult {
    Rat coeff;
    long target = 0;
    bool in_window = true;
};

/** gen in {e, h, f}; the index is a window offset. */
ActResult act(char gen, long offset, const OmegaWindow& w);

/** [e,f] = h, [h,e] = 2e, [h,f] = -2f on every state whose neighbours lie in the window. */
Report bracket_check(const OmegaWindow& w);

struct SplitInfo {
    std::vector<Rat> split_points; // b' inside the window where the f_0 coefficient vanishes
    std::vector<Rat> roots_in_class; // all roots of the f_0 coefficient congruent to b mod 1
    std::string case_label;          // "(1)(i)", "(1)(ii)", "(2)(i)", "(2)(ii)", "(2)(iii)"
    std::string structure;           // composition series, e.g. "L^-(1) --> L^+(-1)"
};

SplitInfo split_points(const OmegaWindow& w);

/** bracket_check and the classifier over p <= pMax, 1 <= r <= p, s in 1..3, b in {0, 1/7, -a_{r,s}, -a_{-r,-s}}. */
Report weight_window_sweep(long pMax);

} // namespace voaforge

#include "voaforge/weight_window.hpp"
#include "voaforge/lattice.hpp"

#include <algorithm>

namespace voaforge {

Rat OmegaWindow::level() const { return Rat(-2) + Rat(1, p); }

ActResult act(char gen, long offset, const OmegaWindow& w) {
    const Rat bp = w.bprime(offset);
    ActResult res;
    switch (gen) {
    case 'e':
        res.coeff = Rat(1);
        res.target = offset + 1;
        break;
    case 'h':
        res.coeff = Rat(2) * bp - w.level();
        res.target = offset;
        break;
    case 'f':
        res.coeff = -(bp + a_rs(w.p, w.r, w.s)) * (bp + a_rs(w.p, -w.r, -w.s));
        res.target = offset - 1;
        break;
    default: throw MathError(std::string("unknown sl2 generator ") + gen);
    }
    res.in_window = w.contains(res.target);
    return res;
}

namespace {

// Coefficient of theta_{target} in X Y theta_{offset}; returns false when the path leaves the window.
bool compose(char x, char y, long offset, const OmegaWindow& w, Rat& coeff, long& target) {
    ActResult a = act(y, offset, w);
    if (!a.in_window) return false;
    ActResult b = act(x, a.target, w);
    if (!b.in_window) return false;
    coeff = b.coeff * a.coeff;
    target = b.target;
    return true;
}

bool commutator(char x, char y, long offset, const OmegaWindow& w, Rat& coeff, long& target) {
    Rat c1, c2;
    long t1 = 0, t2 = 0;
    if (!compose(x, y, offset, w, c1, t1) || !compose(y, x, offset, w, c2, t2)) return false;
    if (t1 != t2) throw MathError("inconsistent targets in the window model");
    coeff = c1 - c2;
    target = t1;
    return true;
}

std::string window_label(const OmegaWindow& w) {
    return "p=" + std::to_string(w.p) + " r=" + std::to_string(w.r) + " s=" + std::to_string(w.s) + " b=" + w.b.str();
}

} // namespace

Report bracket_check(const OmegaWindow& w) {
    Report rep;
    rep.name = "bracket_check(" + window_label(w) + ")";
    for (long i = w.lo; i <= w.hi; ++i) {
        const std::string at = "b'=" + w.bprime(i).str();
        Rat c;
        long t = 0;
        if (commutator('e', 'f', i, w, c, t)) {
            ActResult h = act('h', i, w);
            rep.add("[e,f]=h at " + at, t == h.target && c == h.coeff, "got " + c.str() + ", expected " + h.coeff.str());
        }
        if (commutator('h', 'e', i, w, c, t)) {
            ActResult e = act('e', i, w);
            rep.add("[h,e]=2e at " + at, t == e.target && c == Rat(2) * e.coeff, "got " + c.str());
        }
        if (commutator('h', 'f', i, w, c, t)) {
            ActResult f = act('f', i, w);
            rep.add("[h,f]=-2f at " + at, t == f.target && c == Rat(-2) * f.coeff, "got " + c.str());
        }
    }
    return rep;
}

SplitInfo split_points(const OmegaWindow& w) {
    SplitInfo info;
    const Rat k = w.level();
    const Rat a1 = a_rs(w.p, w.r, w.s), a2 = a_rs(w.p, -w.r, -w.s);
    for (const Rat& a : {a1, a2}) {
        Rat root = -a;
        if (!(root - w.b).is_integer()) continue;
        if (std::find(info.roots_in_class.begin(), info.roots_in_class.end(), root) != info.roots_in_class.end()) continue;
        info.roots_in_class.push_back(root);
    }
    std::sort(info.roots_in_class.begin(), info.roots_in_class.end());
    for (const Rat& root : info.roots_in_class) {
        Rat off = root - w.b;
        if (w.contains(off.to_long())) info.split_points.push_back(root);
    }
    const bool degenerate = (w.r == w.p);
    const std::string part = degenerate ? "(2)" : "(1)";
    auto lw = [&](const Rat& root) { return Rat(2) * root - k; };
    const size_t n = info.roots_in_class.size();
    if (n == 0) {
        info.case_label = part + "(i)";
        info.structure = "simple";
    } else if (n == 1) {
        const Rat& root = info.roots_in_class[0];
        info.case_label = degenerate ? (w.s == 1 ? "(2)(ii)" : "(2)(?)") : "(1)(ii)";
        info.structure = "L^-(" + lw(root).str() + ") --> L^+(" + (lw(root) - Rat(2)).str() + ")";
    } else {
        // two lowest weight vectors: the larger root carries L^-, the smaller bounds the top quotient
        const Rat &lo = info.roots_in_class[0], &hi = info.roots_in_class[1];
        info.case_label = (degenerate && w.s != 1) ? "(2)(iii)" : part + "(?)";
        info.structure = "L^-(" + lw(hi).str() + ") --> L^+(" + (lw(hi) - Rat(2)).str() + ") --> L^+(" +
                         (lw(lo) - Rat(2)).str() + ")";
    }
    return info;
}

Report weight_window_sweep(long pMax) {
    Report rep;
    rep.name = "weight-window sweep p<=" + std::to_string(pMax);
    for (long p = 1; p <= pMax; ++p)
        for (long r = 1; r <= p; ++r)
            for (long s = 1; s <= 3; ++s) {
                const Rat ars = a_rs(p, r, s), amrs = a_rs(p, -r, -s);
                for (const Rat& b : {Rat(0), Rat(1, 7), -ars, -amrs}) {
                    OmegaWindow w{p, r, s, b, -6, 6};
                    Report br = bracket_check(w);
                    rep.add("brackets " + window_label(w), br.passed(), br.first_problem());
                    const bool special = (b + ars).is_integer() || (b + amrs).is_integer();
                    std::string expect;
                    if (r < p) expect = special ? "(1)(ii)" : "(1)(i)";
                    else if (!special) expect = "(2)(i)";
                    else expect = (s == 1) ? "(2)(ii)" : "(2)(iii)";
                    SplitInfo si = split_points(w);
                    bool ok = si.case_label == expect;
                    // every split point is a lowest weight vector: f_0 kills it
                    for (const Rat& sp : si.split_points) {
                        ActResult f = act('f', (sp - b).to_long(), w);
                        ok = ok && f.coeff.is_zero();
                    }
                    rep.add("classify " + window_label(w), ok, "got " + si.case_label + ", expected " + expect);
                }
            }
    return rep;
}

} // namespace voaforge

#include "voaforge/characters.hpp"
#include "voaforge/lattice.hpp"
#include "voaforge/realizations.hpp"

#include <algorithm>
#include <map>

namespace voaforge {

namespace {

long ceil_long(const Rat& r) { return r.ceil().get_si(); }

// 1/(1 - c z^m q^e) with e > 0, truncated below q^order.
BiSeries geometric_q(const Rat& m, const Rat& e, const Rat& order) {
    BiSeries s = BiSeries::one();
    for (long k = 1; Rat(k) * e < order; ++k) s.add_term(Rat(1), Rat(k) * e, Rat(k) * m);
    s.truncate(order);
    return s;
}

std::string key_str(const SeriesKey& k) {
    std::string out = "q^" + k.q.str() + " z^" + k.z.str();
    if (k.w != 0) out += " w^" + std::to_string(k.w);
    return out;
}

void compare(Report& rep, const std::string& item, const BiSeries& a, const BiSeries& b) {
    auto d = a.first_difference(b);
    std::string detail;
    if (d) detail = "first difference at " + key_str(*d) + ": " + a.coeff(d->q, d->z, d->w).str() + " vs " +
                    b.coeff(d->q, d->z, d->w).str();
    rep.add(item, !d, detail);
}

// The z-window a factor must be known on so that multiplying by z^shift lands on [lo, hi].
Rat inner_lo(const Window& win, const Rat& maxShift) {
    return Rat(std::min<long>(0, (win.zlo - maxShift).floor().get_si() - 2 * ceil_long(win.order) - 2));
}

BiSeries clipped(BiSeries s, const Window& win) {
    s.truncate(win.order);
    s.clip(win.zlo, win.zhi);
    return s;
}

// 1/(z^2 q, z^{-2}, q; q)_infinity, known on z >= bound.
BiSeries den_simple(const Rat& order, const Rat& bound) {
    return pochhammer_inverse({{Rat(2), Rat(1)}, {Rat(-2), Rat(0)}, {Rat(0), Rat(1)}}, order, bound);
}

// 1/(z^2 q, z^{-2} q, q; q)_infinity.
BiSeries den_weyl(const Rat& order) {
    return pochhammer_inverse({{Rat(2), Rat(1)}, {Rat(-2), Rat(1)}, {Rat(0), Rat(1)}}, order, Rat(0));
}

Rat f_lambda(long p, long r, long s) { return lambda_rs(p, r, s); }
Rat f_delta(long p, long r, long s) { return delta_rs(p, r, s); }

// Indices n with Delta_{r, 2n+s} or Delta_{r, -(2n+s)} below order, for n >= 0.
long max_n_below(long p, long r, long s, const Rat& order) {
    long n = 0;
    while (f_delta(p, r, 2 * (n + 1) + s) < order || f_delta(p, r, -(2 * (n + 1) + s)) < order) ++n;
    return n;
}

// ch L(lambda_{r,s}) = (f_{r,s} - f_{r,-s}) / (z^2 q, z^{-2}, q; q)_infinity.
BiSeries simple_affine(long p, long r, long s, const Window& win) {
    if (r == 0 && s <= 0) throw MathError("character formula needs r != 0 or s > 0");
    Rat l1 = f_lambda(p, r, s), l2 = f_lambda(p, r, -s);
    BiSeries num = BiSeries::monomial(Rat(1), f_delta(p, r, s), l1) -
                   BiSeries::monomial(Rat(1), f_delta(p, r, -s), l2);
    Rat lead = std::min(f_delta(p, r, s), f_delta(p, r, -s));
    BiSeries inv = den_simple(win.order - std::min(lead, Rat(0)), inner_lo(win, std::max(l1, l2)));
    return clipped(num * inv, win);
}

BiSeries weyl(long p, long n, const Window& win) {
    BiSeries num = sl2_character(n).shift(f_delta(p, 1, n + 1), Rat(0));
    return clipped(num * den_weyl(win.order), win);
}

BiSeries singlet_raw(long n, const Rat& order) {
    BiSeries s;
    for (long j = 0;; ++j) {
        long m = n + j;
        Rat e(m * (m + 1), 2);
        if (m >= 0 && e >= order) break;
        s.add_term(Rat(j % 2 == 0 ? 1 : -1), e, Rat(0));
    }
    s.truncate(order);
    BiSeries out = s * pochhammer_inverse({{Rat(0), Rat(1)}}, order, Rat(0));
    return out.truncate(order);
}

BiSeries singlet(long n, const Window& win) { return clipped(singlet_raw(n, win.order), win); }

BiSeries pi_h_raw(long n, const Rat& order) {
    Rat d = pi_h_weight(n);
    BiSeries inv = pochhammer_inverse({{Rat(0), Rat(1)}}, order - std::min(d, Rat(0)), Rat(0));
    return inv.shift(d, Rat(n)).truncate(order);
}

BiSeries ft_algebra(long p, const Window& win) {
    BiSeries total;
    total.truncate(win.order);
    for (long n = 0; f_delta(p, 1, n + 1) < win.order; n += 2) total += weyl(p, n, win) * Rat(n + 1);
    return clipped(total, win);
}

// sum_{n in Z} w^{s+2n-1} f_{r,2n+s} / (z^2 q, z^{-2}, q; q)_infinity
BiSeries lattice_module(long p, long r, long s, const Window& win) {
    const long N = max_n_below(p, r, s, win.order) + std::abs(s) + 2;
    BiSeries num;
    Rat maxl(0), minq(0);
    for (long n = -N - std::abs(s); n <= N; ++n) {
        Rat d = f_delta(p, r, 2 * n + s);
        if (d >= win.order) continue;
        Rat l = f_lambda(p, r, 2 * n + s);
        num.add_term(Rat(1), d, l, s + 2 * n - 1);
        maxl = std::max(maxl, l);
        minq = std::min(minq, d);
    }
    BiSeries inv = den_simple(win.order - minq, inner_lo(win, maxl));
    return clipped(num * inv, win);
}

} // namespace

BiSeries pochhammer(const std::vector<PochArg>& args, const Rat& order) {
    BiSeries s = BiSeries::one();
    s.truncate(order);
    for (const auto& a : args) {
        if (a.q.sign() < 0) throw MathError("Pochhammer argument with negative q-exponent");
        if (a.q.is_zero() && a.z.is_zero()) throw MathError("Pochhammer argument 1 gives the zero product");
        for (Rat e = a.q; e < order; e += Rat(1)) {
            BiSeries f = BiSeries::one() - BiSeries::monomial(Rat(1), e, a.z);
            f.truncate(order);
            s = s * f;
        }
    }
    return s;
}

BiSeries pochhammer_inverse(const std::vector<PochArg>& args, const Rat& order, const Rat& zBound) {
    BiSeries s = BiSeries::one();
    s.truncate(order);
    BiSeries zpart = BiSeries::one();
    for (const auto& a : args) {
        if (a.q.sign() < 0) throw MathError("Pochhammer argument with negative q-exponent");
        Rat e = a.q;
        if (e.is_zero()) {
            if (a.z.sign() >= 0)
                throw MathError("non-convergent formal argument z^" + a.z.str() +
                                " at q^0: only negative z-powers are expanded");
            zpart = zpart * BiSeries::geometric_z(a.z, zBound);
            e += Rat(1);
        }
        for (; e < order; e += Rat(1)) s = s * geometric_q(a.z, e, order);
    }
    BiSeries out = zpart * s;
    out.truncate(order);
    return out;
}

BiSeries sl2_character(long n, bool w) {
    if (n < 0) throw MathError("sl2 character needs n >= 0");
    BiSeries s;
    for (long j = 0; j <= n; ++j) {
        if (w) s.add_term(Rat(1), Rat(0), Rat(0), n - 2 * j);
        else s.add_term(Rat(1), Rat(0), Rat(n - 2 * j));
    }
    return s;
}

CharKind char_kind_from_string(const std::string& s) {
    static const std::map<std::string, CharKind> m = {
        {"fock", CharKind::Fock},         {"betagamma", CharKind::BetaGamma}, {"lattice-module", CharKind::LatticeModule},
        {"simple", CharKind::SimpleAffine}, {"simple-affine", CharKind::SimpleAffine}, {"weyl", CharKind::Weyl},
        {"singlet", CharKind::Singlet},   {"ft-algebra", CharKind::FtAlgebra}, {"ft", CharKind::FtAlgebra},
        {"pi-h", CharKind::PiH}};
    auto it = m.find(s);
    if (it == m.end()) throw MathError("unknown character kind " + s);
    return it->second;
}

std::string char_kind_name(CharKind k) {
    switch (k) {
    case CharKind::Fock: return "fock";
    case CharKind::BetaGamma: return "betagamma";
    case CharKind::LatticeModule: return "lattice-module";
    case CharKind::SimpleAffine: return "simple-affine";
    case CharKind::Weyl: return "weyl";
    case CharKind::Singlet: return "singlet";
    case CharKind::FtAlgebra: return "ft-algebra";
    case CharKind::PiH: return "pi-h";
    }
    return "?";
}

Rat pi_h_weight(long n) {
    static const FockState Lh = [] {
        Realization w = build("wakimoto", 1);
        Realization g = build("p1", 1);
        return w.at("L") - g.at("L1") - g.at("L2");
    }();
    // h = -2v - A in pi0_lattice(1); the momentum with h_0-eigenvalue n is -(n/2) h
    RatVec mom = {Rat(0), Rat(n), Rat(n, 2)};
    return conf_weight(FockState::exp(spaces::pi0_lattice(1), mom), Lh);
}

BiSeries character(const CharSpec& spec, const Window& win) {
    if (spec.p < 1) throw MathError("p must be positive");
    switch (spec.kind) {
    case CharKind::Fock: {
        BiSeries inv = pochhammer_inverse({{Rat(0), Rat(1)}}, win.order - std::min(spec.delta, Rat(0)), Rat(0));
        return clipped(inv.shift(spec.delta, spec.lambda), win);
    }
    case CharKind::BetaGamma:
        return clipped(pochhammer_inverse({{Rat(2), Rat(1)}, {Rat(-2), Rat(0)}}, win.order, inner_lo(win, Rat(0))), win);
    case CharKind::LatticeModule: return lattice_module(spec.p, spec.r, spec.s, win);
    case CharKind::SimpleAffine: return simple_affine(spec.p, spec.r, spec.s, win);
    case CharKind::Weyl: return weyl(spec.p, spec.n, win);
    case CharKind::Singlet: return singlet(spec.n, win);
    case CharKind::FtAlgebra: return ft_algebra(spec.p, win);
    case CharKind::PiH: return clipped(pi_h_raw(spec.n, win.order), win);
    }
    throw MathError("unknown character kind");
}

BiSeries atiyah_bott_character(const BiSeries& A) {
    // numerator w A(w) - w^{-1} A(w^{-1}), then divide by w - w^{-1} coefficientwise
    std::map<std::pair<Rat, Rat>, std::map<long, Rat>> num;
    for (const auto& [k, c] : A.terms()) {
        num[{k.q, k.z}][k.w + 1] += c;
        num[{k.q, k.z}][-k.w - 1] -= c;
    }
    BiSeries out;
    if (A.q_order()) out.truncate(*A.q_order());
    out.clip(A.z_lo(), A.z_hi());
    for (auto& [qz, poly] : num) {
        long top = 0;
        for (const auto& [e, c] : poly)
            if (!c.is_zero()) top = std::max(top, e);
        // Q(w)(w - w^{-1}) = P(w): Q_{j-1} = P_j + Q_{j+1}, from the top down
        std::map<long, Rat> Q;
        for (long j = top; j >= 1; --j) {
            Rat pj = poly.count(j) ? poly[j] : Rat(0);
            Rat qj1 = Q.count(j + 1) ? Q[j + 1] : Rat(0);
            Q[j - 1] = pj + qj1;
        }
        for (const auto& [e, c] : Q) {
            if (c.is_zero()) continue;
            out.add_term(c, qz.first, qz.second, e);
            if (e != 0) out.add_term(c, qz.first, qz.second, -e);
        }
    }
    return out;
}

Rat char_coeff(const BiSeries& s, const Rat& h, const Rat& d) { return s.coeff(d, h); }

json series_json(const BiSeries& s) {
    auto exp = [](const Rat& r) -> json {
        if (r.is_integer()) return std::stol(r.str());
        return r.json();
    };
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) {
        json t = {{"q", k.q.json()}, {"z", exp(k.z)}};
        if (s.has_w()) t["w"] = k.w;
        t["c"] = c.json();
        terms.push_back(t);
    }
    json out = {{"terms", terms}};
    out["qOrder"] = s.q_order() ? json(s.q_order()->json()) : json(nullptr);
    out["zWindow"] = {s.z_lo() ? json(exp(*s.z_lo())) : json(nullptr), s.z_hi() ? json(exp(*s.z_hi())) : json(nullptr)};
    return out;
}

Report weyl_simple_check(long p, long n, const Window& win) {
    Report rep;
    rep.name = "weyl = simple (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
    BiSeries w = weyl(p, n, win);
    BiSeries s = simple_affine(p, 1, n + 1, win);
    compare(rep, "ch V(" + std::to_string(n) + " varpi) = ch L(lambda_{1," + std::to_string(n + 1) + "})", w, s);
    return rep;
}

Report decomposition_check(long p, long r, long s, const Window& win) {
    Report rep;
    rep.name = "decomposition_check(p=" + std::to_string(p) + ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")";
    if (r < 1 || r > p || s < 1) throw MathError("decomposition_check needs 1 <= r <= p and s >= 1");
    auto sp = spaces::pi0_lattice(p);
    const FockState L = build("wakimoto", p).at("L");
    const FockState h = build("wakimoto", p).at("h");
    const long N = max_n_below(p, r, s, win.order) + std::abs(s) + 2;
    BiSeries fock_sum;
    Rat maxl(0), minq(0);
    for (long n = -N - s; n <= N; ++n) {
        const long m = 2 * n + s;
        RatVec mom = {Rat(0), Rat(0), Rat(-(m - 1), 2) + Rat(r - 1, 2 * p)};
        FockState e = FockState::exp(sp, mom);
        Rat d = conf_weight(e, L);
        FockState he = nth_product(h, 0, e);
        Rat l = he.is_zero() ? Rat(0) : he.terms().begin()->second;
        if (d >= win.order) continue;
        fock_sum.add_term(Rat(1), d, l, m - 1);
        maxl = std::max(maxl, l);
        minq = std::min(minq, d);
    }
    Window inner = win;
    inner.order = win.order - minq;
    inner.zlo = inner_lo(win, maxl);
    BiSeries bg = pochhammer_inverse({{Rat(2), Rat(1)}, {Rat(-2), Rat(0)}}, inner.order, inner.zlo);
    BiSeries heis = pochhammer_inverse({{Rat(0), Rat(1)}}, inner.order, Rat(0));
    BiSeries A = clipped(fock_sum * (bg * heis), win);
    BiSeries rhs = atiyah_bott_character(A);
    BiSeries lhs;
    lhs.truncate(win.order);
    lhs.clip(win.zlo, win.zhi);
    // every n with 2n + s >= 1
    for (long n = -((s - 1) / 2); f_delta(p, r, 2 * n + s) < win.order || f_delta(p, r, -(2 * n + s)) < win.order; ++n)
        lhs += sl2_character(2 * n + s - 1, true) * simple_affine(p, r, 2 * n + s, win);
    compare(rep, "sum chi_{2n+s-1}(w) ch L(lambda_{r,2n+s}) = Weyl symmetrisation of ch(bg x V_{r,s})", lhs, rhs);
    compare(rep, "w = 1 specialisation", lhs.w_to_one(), rhs.w_to_one());
    return rep;
}

Report p1_decomposition_check(const Window& win, bool perturb) {
    Report rep;
    rep.name = "p1_decomposition_check";
    BiSeries lhs = ft_algebra(1, win);
    const long zmax = std::max(std::abs(win.zlo.floor().get_si()), std::abs(win.zhi.ceil().get_si()));
    // M_n up to the window order minus the lowest pi^h weight
    Rat lowest(0);
    for (long N = -zmax; N <= zmax; ++N)
        if (N % 2 == 0 && Rat(N) >= win.zlo && Rat(N) <= win.zhi) lowest = std::min(lowest, pi_h_weight(N));
    const Rat mOrder = win.order - lowest;
    std::map<long, BiSeries> M;
    auto chM = [&](long n) -> const BiSeries& {
        auto it = M.find(n);
        if (it != M.end()) return it->second;
        BiSeries s = singlet_raw(n, mOrder);
        if (perturb && n == 1) s += BiSeries::monomial(Rat(1), Rat(2), Rat(0));
        s.truncate(mOrder);
        return M.emplace(n, s).first->second;
    };
    BiSeries rhs;
    rhs.truncate(win.order);
    const long K = zmax + 2 * ceil_long(mOrder) + 4;
    json weights = json::object();
    for (long N = -zmax; N <= zmax; ++N) {
        if (N % 2 != 0 || Rat(N) < win.zlo || Rat(N) > win.zhi) continue;
        Rat wh = pi_h_weight(N);
        weights[std::to_string(N)] = wh.str();
        BiSeries ph = pi_h_raw(N, win.order - std::min(wh, Rat(0)));
        for (long n = -K; n <= K; ++n) {
            const long m = N - n;
            const BiSeries &a = chM(n), &b = chM(m);
            if (a.empty() || b.empty()) continue;
            if (*a.min_q() + *b.min_q() + wh >= win.order) continue;
            rhs += a * b * ph;
        }
    }
    rep.data["pi_h_weights"] = weights;
    compare(rep, "ch FT_1 = sum ch M_n ch M_m ch pi^h", lhs, clipped(rhs, win));
    return rep;
}

Report ct_pipeline_check(long p, long r, long n, long s, const Window& win) {
    Report rep;
    rep.name = "CT_w pipeline (p=" + std::to_string(p) + ", r=" + std::to_string(r) + ", n=" + std::to_string(n) +
               ", s=" + std::to_string(s) + ")";
    if (r < 1 || r >= p) throw MathError("CT pipeline needs 1 <= r < p");
    const long rr = p - r, ss = 3 - s;
    BiSeries A = lattice_module(p, rr, ss, win);
    BiSeries B;
    B.truncate(win.order);
    B.clip(win.zlo, win.zhi);
    for (long j = 0; f_delta(p, rr, 2 * j + ss) < win.order || f_delta(p, rr, -(2 * j + ss)) < win.order; ++j) {
        if (2 * j + ss < 1) continue;
        B += sl2_character(2 * j + ss - 1, true) * simple_affine(p, rr, 2 * j + ss, win);
    }
    const long m = 2 * n + s;
    BiSeries kernel = BiSeries::monomial(Rat(1), Rat(0), Rat(0), -(m - 1) + 1) -
                      BiSeries::monomial(Rat(1), Rat(0), Rat(0), -(m + 1) + 1);
    BiSeries ct = (kernel * (A - B)).ct_w();
    // closed form (f_{p-r,-(2n+s-1)} - f_{p-r,2n+s+1}) / (z^2 q, z^{-2}, q; q)
    Rat l1 = f_lambda(p, rr, -(m - 1)), l2 = f_lambda(p, rr, m + 1);
    Rat d1 = f_delta(p, rr, -(m - 1)), d2 = f_delta(p, rr, m + 1);
    BiSeries num = BiSeries::monomial(Rat(1), d1, l1) - BiSeries::monomial(Rat(1), d2, l2);
    BiSeries closed = clipped(num * den_simple(win.order - std::min({d1, d2, Rat(0)}), inner_lo(win, std::max(l1, l2))), win);
    compare(rep, "CT_w[(w^{-(2n+s-1)} - w^{-(2n+s+1)}) w (A - B)] = closed form", ct, closed);
    compare(rep, "closed form = ch L(lambda_{-r,-(2n+s)})", closed, simple_affine(p, -r, -m, win));
    return rep;
}

} // namespace voaforge

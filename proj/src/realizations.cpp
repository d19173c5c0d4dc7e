#include "voaforge/realizations.hpp"

namespace voaforge {

namespace {

RatVec vec3(const Rat& u, const Rat& v, const Rat& A) { return {u, v, A}; }

FockState nop(const FockState& a, const FockState& b) { return nth_product(a, -1, b); }

FockState heis_quadratic(SpacePtr sp, const RatVec& x, const RatVec& y) {
    return FockState::vacuum(sp).create(y, 1).create(x, 1);
}

Realization make(std::string name, std::string source, long p, SpacePtr sp) {
    Realization r;
    r.name = std::move(name);
    r.source = std::move(source);
    r.p = p;
    r.target = std::move(sp);
    return r;
}

} // namespace

const FockState& Realization::at(const std::string& gen) const {
    for (const auto& [g, s] : images)
        if (g == gen) return s;
    throw MathError("realization " + name + " has no generator " + gen);
}

bool Realization::has(const std::string& gen) const {
    for (const auto& [g, s] : images)
        if (g == gen) return true;
    return false;
}

Rat level(long p) { return Rat(-2) + Rat(1, p); }

FockState fms_beta(long p) { return FockState::exp(spaces::pi0_lattice(p), vec3(1, 1, 0)); }

FockState fms_gamma(long p) {
    return Rat(-1) * FockState::exp(spaces::pi0_lattice(p), vec3(-1, -1, 0)).create(0, 1);
}

FockState omega_1p(long p) {
    auto sp = spaces::pi0_lattice(p);
    RatVec A = vec3(0, 0, 1);
    return Rat(1, 4 * p) * heis_quadratic(sp, A, A) + Rat(p - 1, 2 * p) * FockState::vacuum(sp).create(A, 2);
}

static std::vector<std::pair<std::string, FockState>> wakimoto_images(long p) {
    auto sp = spaces::pi0_lattice(p);
    const Rat k = level(p);
    FockState beta = fms_beta(p), gamma = fms_gamma(p);
    FockState Avec = FockState::vacuum(sp).create(vec3(0, 0, 1), 1);
    FockState gb = nop(gamma, beta);
    FockState e = beta;
    FockState h = Rat(-2) * gb - Rat(1, p) * Avec;
    FockState f = Rat(-1) * nop(gamma, gb) - Rat(1, p) * nop(gamma, Avec) + k * translate(gamma);
    FockState L = nop(beta, translate(gamma)) + Rat(1, 4 * p) * heis_quadratic(sp, vec3(0, 0, 1), vec3(0, 0, 1)) +
                  Rat(1, 2) * FockState::vacuum(sp).create(vec3(0, 0, 1), 2);
    return {{"e", e}, {"h", h}, {"f", f}, {"L", L}};
}

static std::vector<std::pair<std::string, FockState>> phi_images(long p) {
    auto sp = spaces::pi0_lattice(p);
    const Rat k = level(p);
    const Rat q = Rat(1, 4 * p);
    RatVec bu = vec3(Rat(1) - q, -q, 0);
    RatVec bv = vec3(-q, Rat(1) - q, 0);
    FockState e = fms_beta(p);
    FockState h = Rat(-2) * FockState::vacuum(sp).create(bv, 1);
    FockState em = FockState::exp(sp, vec3(-1, -1, 0));
    FockState omega = omega_1p(p);
    FockState omega_em(sp);
    for (const auto& [m, c] : omega.terms()) omega_em.add(Mono{em.terms().begin()->first.mom, m.modes}, c);
    FockState f = Rat(1, p) * omega_em - em.create(bu, 1).create(bu, 1) - (k + Rat(1)) * em.create(bu, 2);
    FockState v0 = FockState::vacuum(sp);
    FockState L = Rat(1, 2) * (heis_quadratic(sp, vec3(1, 0, 0), vec3(1, 0, 0)) - heis_quadratic(sp, vec3(0, 1, 0), vec3(0, 1, 0))) +
                  q * v0.create(vec3(1, 1, 0), 2) - v0.create(vec3(1, 0, 0), 2) + omega;
    return {{"e", e}, {"h", h}, {"f", f}, {"L", L}};
}

static std::vector<std::pair<std::string, FockState>> m2_images() {
    auto sp = spaces::singlet_u();
    FockState v0 = FockState::vacuum(sp);
    FockState L = Rat(1, 2) * v0.create(0, 1).create(0, 1) + Rat(1, 2) * v0.create(0, 2);
    FockState W = Rat(1, 3) * v0.create(0, 1).create(0, 1).create(0, 1) + Rat(1, 2) * v0.create(0, 2).create(0, 1) +
                  Rat(1, 6) * v0.create(0, 3);
    return {{"L", L}, {"W", W}};
}

FockState screening_charge_plus(long p) { return FockState::exp(spaces::pi0_lattice(p), vec3(1, 1, 1)); }

FockState apply_q_plus(const FockState& s, long p) { return nth_product(screening_charge_plus(p), 0, s); }

FockState apply_f0(const FockState& s, long p) {
    static thread_local std::map<long, FockState> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, wakimoto_images(p)[2].second).first;
    return nth_product(it->second, 0, s);
}

FockState strong_generator_n00(long n, long p) { return FockState::exp(spaces::pi0_lattice(p), vec3(0, 0, -n)); }

FockState strong_generator(int i, int j, long p) {
    if (i < 0 || j < 0 || i > 2 || j > 2) throw MathError("strong generator indices must lie in 0..2");
    FockState s = strong_generator_n00(1, p);
    for (int a = 0; a < j; ++a) s = apply_q_plus(s, p);
    for (int a = 0; a < i; ++a) s = apply_f0(s, p);
    return s;
}

static std::vector<std::pair<std::string, FockState>> p1_images() {
    const long p = 1;
    auto sp = spaces::pi0_lattice(p);
    auto w = wakimoto_images(p);
    const FockState &e = w[0].second, &h = w[1].second, &f = w[2].second;
    FockState v0 = FockState::vacuum(sp);
    RatVec u1 = vec3(-1, 0, 0), u2 = vec3(0, 1, 1);
    auto Lgen = [&](const RatVec& x) { return Rat(1, 2) * v0.create(x, 1).create(x, 1) + Rat(1, 2) * v0.create(x, 2); };
    auto Wgen = [&](const RatVec& x) {
        return Rat(1, 3) * v0.create(x, 1).create(x, 1).create(x, 1) + Rat(1, 2) * v0.create(x, 2).create(x, 1) +
               Rat(1, 6) * v0.create(x, 3);
    };
    FockState x01 = strong_generator(0, 1, p), x11 = strong_generator(1, 1, p), x21 = strong_generator(2, 1, p);
    FockState A = Rat(2) * nop(h, nop(h, h)) + nop(h, translate(h)) + Rat(7) * translate(translate(h)) -
                  Rat(15) * (nop(translate(e), f) - nop(translate(f), e)) - Rat(6) * nop(e, nop(f, h));
    FockState Ac = Rat(-2) * nop(h, nop(h, h)) + Rat(3) * nop(h, translate(h)) + Rat(7) * translate(translate(h)) -
                   Rat(15) * (nop(translate(e), f) - nop(translate(f), e)) - Rat(6) * nop(e, nop(f, h));
    FockState B = Rat(2) * nop(f, x01) - Rat(4) * nop(h, x11) - nop(e, x21);
    FockState sug = Rat(1, 2) * (Rat(1, 2) * nop(h, h) + nop(e, f) - Rat(1, 2) * translate(h));
    return {{"L1", Lgen(u1)}, {"L2", Lgen(u2)}, {"W1", Wgen(u1)}, {"W2", Wgen(u2)},
            {"A", A},         {"A'", Ac},       {"B", B},         {"sug", sug},
            {"x11", x11}};
}

Realization build(const std::string& name, long p) {
    if (p < 1) throw MathError("p must be positive");
    if (name == "wakimoto") {
        Realization r = make(name, "affine-sl2", p, spaces::pi0_lattice(p));
        r.images = wakimoto_images(p);
        return r;
    }
    if (name == "fms") {
        Realization r = make(name, "betagamma", p, spaces::pi0_lattice(p));
        r.images = {{"beta", fms_beta(p)}, {"gamma", fms_gamma(p)}};
        return r;
    }
    if (name == "phi") {
        Realization r = make(name, "affine-sl2", p, spaces::pi0_lattice(p));
        r.images = phi_images(p);
        return r;
    }
    if (name == "omega") {
        Realization r = make(name, "virasoro", p, spaces::pi0_lattice(p));
        r.images = {{"L", omega_1p(p)}};
        return r;
    }
    if (name == "m2") {
        Realization r = make(name, "M2", 1, spaces::singlet_u());
        r.images = m2_images();
        return r;
    }
    if (name == "strong") {
        Realization r = make(name, "generators", p, spaces::pi0_lattice(p));
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                r.images.push_back({"x" + std::to_string(i) + std::to_string(j), strong_generator(i, j, p)});
        return r;
    }
    if (name == "p1") {
        if (p != 1) throw MathError("the p1 generator set exists only for p = 1");
        Realization r = make(name, "generators", 1, spaces::pi0_lattice(1));
        r.images = p1_images();
        return r;
    }
    throw MathError("unknown realization " + name);
}

std::vector<std::string> realization_names() { return {"wakimoto", "fms", "phi", "omega", "m2", "strong", "p1"}; }

RatVec g_vector(const RatVec& x, long p, bool inverse) {
    // images of the basis u, v, A as columns
    const Rat q = Rat(1, 4 * p), t = Rat(1, 2 * p);
    RatMat G = {{Rat(1) - q, q, Rat(-1)}, {-q, Rat(1) + q, Rat(-1)}, {t, -t, Rat(1)}};
    if (inverse) {
        // g is unipotent up to the null direction; invert by solving G y = x
        RatMat a = G;
        RatVec b = x;
        const size_t n = 3;
        for (size_t c = 0; c < n; ++c) {
            size_t piv = c;
            while (a[piv][c].is_zero()) ++piv;
            std::swap(a[piv], a[c]);
            std::swap(b[piv], b[c]);
            Rat f = Rat(1) / a[c][c];
            for (size_t j = 0; j < n; ++j) a[c][j] *= f;
            b[c] *= f;
            for (size_t i = 0; i < n; ++i) {
                if (i == c || a[i][c].is_zero()) continue;
                Rat gq = a[i][c];
                for (size_t j = 0; j < n; ++j) a[i][j] -= gq * a[c][j];
                b[i] -= gq * b[c];
            }
        }
        return b;
    }
    RatVec y(3, Rat(0));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) y[i] += G[i][j] * x[j];
    return y;
}

FockState apply_g(const FockState& s, long p, bool inverse) {
    auto sp = spaces::pi0_lattice(p);
    if (s.space() && s.space()->names() != sp->names()) throw MathError("g acts on Pi0 x V(sqrt p A1) only");
    FockState out(sp);
    for (const auto& [m, c] : s.terms()) {
        auto coords = sp->lattice_coords(m.mom);
        if (!coords || (*coords)[1] != 0)
            throw MathError("momentum " + sp->vec_str(m.mom) + " lies outside Z(u+v) + ZA");
        FockState t = FockState::exp(sp, g_vector(m.mom, p, inverse));
        for (auto it = m.modes.rbegin(); it != m.modes.rend(); ++it)
            t = t.create(g_vector(sp->unit(it->gen), p, inverse), it->depth);
        out += c * t;
    }
    return out;
}

std::optional<Rat> virasoro_central_charge(const FockState& L, std::string* why) {
    auto fail = [&](const std::string& w) -> std::optional<Rat> {
        if (why) *why = w;
        return std::nullopt;
    };
    const SpacePtr& sp = L.space();
    long mp = max_pole(L, L);
    if (mp > 3) return fail("pole of order " + std::to_string(mp + 1) + " in L.L");
    FockState p4 = nth_product(L, 3, L);
    FockState v0 = FockState::vacuum(sp);
    Rat half_c(0);
    if (!p4.is_zero()) {
        if (p4.size() != 1 || !(p4.terms().begin()->first == v0.terms().begin()->first))
            return fail("pole 4 is not a multiple of the vacuum: " + p4.str());
        half_c = p4.terms().begin()->second;
    }
    if (!nth_product(L, 2, L).is_zero()) return fail("pole 3 of L.L is nonzero");
    if (!(nth_product(L, 1, L) == Rat(2) * L)) return fail("pole 2 of L.L is not 2L");
    if (!(nth_product(L, 0, L) == translate(L))) return fail("pole 1 of L.L is not TL");
    return Rat(2) * half_c;
}

namespace {

void ope_expect(Report& rep, const std::string& item, const FockState& a, const FockState& b,
                const std::vector<FockState>& expected) {
    long mp = max_pole(a, b);
    const long want = static_cast<long>(expected.size()) - 1;
    bool ok = true;
    std::string detail;
    if (mp > want) {
        ok = false;
        detail = "unexpected pole of order " + std::to_string(mp + 1);
    }
    for (long n = 0; n <= want && ok; ++n) {
        FockState got = nth_product(a, n, b);
        if (!(got == expected[n])) {
            ok = false;
            detail = "pole " + std::to_string(n + 1) + ": got " + got.str() + ", expected " + expected[n].str();
        }
    }
    rep.add(item, ok, detail);
}

void primary_check(Report& rep, const std::string& item, const FockState& L, const FockState& X, const Rat& weight) {
    long w = weight.to_long();
    std::vector<FockState> exp(w + 1, FockState(L.space()));
    exp[0] = translate(X);
    exp[1] = weight * X;
    ope_expect(rep, item, L, X, exp);
}

} // namespace

Report verify_embedding(const Realization& r) {
    Report rep;
    rep.name = "verify_embedding(" + r.name + ", p=" + std::to_string(r.p) + ")";
    FockState zero(r.target);
    FockState v0 = FockState::vacuum(r.target);
    if (r.source == "affine-sl2") {
        const FockState &e = r.at("e"), &h = r.at("h"), &f = r.at("f");
        FockState p2 = nth_product(e, 1, f);
        std::optional<Rat> k;
        if (p2.is_zero()) k = Rat(0);
        else if (p2.size() == 1 && p2.terms().begin()->first == v0.terms().begin()->first)
            k = p2.terms().begin()->second;
        if (!k) {
            rep.add("level from e.f", false, "pole 2 of e.f is not a multiple of the vacuum: " + p2.str());
            return rep;
        }
        rep.data["level"] = k->json();
        rep.add("level k = -2 + 1/p", *k == level(r.p), "extracted k = " + k->str());
        ope_expect(rep, "e.e", e, e, {});
        ope_expect(rep, "f.f", f, f, {});
        ope_expect(rep, "h.h", h, h, {zero, Rat(2) * *k * v0});
        ope_expect(rep, "h.e", h, e, {Rat(2) * e});
        ope_expect(rep, "h.f", h, f, {Rat(-2) * f});
        ope_expect(rep, "e.f", e, f, {h, *k * v0});
        ope_expect(rep, "f.e", f, e, {-h, *k * v0});
        ope_expect(rep, "e.h", e, h, {Rat(-2) * e});
        ope_expect(rep, "f.h", f, h, {Rat(2) * f});
        if (r.has("L")) {
            std::string why;
            auto c = virasoro_central_charge(r.at("L"), &why);
            Rat want = Rat(3) * *k / (*k + Rat(2));
            rep.add("L.L Virasoro, c = 3k/(k+2)", c && *c == want, c ? "c = " + c->str() : why);
            if (c) rep.data["central_charge"] = c->json();
            for (const char* g : {"e", "h", "f"}) primary_check(rep, std::string("L.") + g + " primary of weight 1", r.at("L"), r.at(g), Rat(1));
        }
        return rep;
    }
    if (r.source == "virasoro") {
        std::string why;
        auto c = virasoro_central_charge(r.at("L"), &why);
        Rat want = Rat(1) - Rat(6) * Rat((r.p - 1) * (r.p - 1), r.p);
        rep.add("L.L Virasoro, c = 1 - 6(p-1)^2/p", c && *c == want, c ? "c = " + c->str() : why);
        if (c) rep.data["central_charge"] = c->json();
        return rep;
    }
    if (r.source == "betagamma") {
        const FockState &b = r.at("beta"), &g = r.at("gamma");
        ope_expect(rep, "beta.gamma", b, g, {v0});
        ope_expect(rep, "gamma.beta", g, b, {-v0});
        ope_expect(rep, "beta.beta", b, b, {});
        ope_expect(rep, "gamma.gamma", g, g, {});
        return rep;
    }
    if (r.source == "M2") {
        const FockState &L = r.at("L"), &W = r.at("W");
        std::string why;
        auto c = virasoro_central_charge(L, &why);
        rep.add("L.L Virasoro, c = -2", c && *c == Rat(-2), c ? "c = " + c->str() : why);
        primary_check(rep, "W primary of weight 3", L, W, Rat(3));
        FockState TL = translate(L);
        FockState LL = nth_product(L, -1, L);
        FockState TLL = nth_product(TL, -1, L);
        std::vector<FockState> exp = {
            Rat(-1, 6) * translate(translate(TL)) + Rat(4) * TLL,
            Rat(-3, 4) * translate(TL) + Rat(4) * LL,
            Rat(3, 2) * TL,
            Rat(3) * L,
            zero,
            -v0,
        };
        ope_expect(rep, "W.W", W, W, exp);
        return rep;
    }
    if (r.source == "generators") {
        if (r.name == "p1") {
            const FockState &L1 = r.at("L1"), &L2 = r.at("L2"), &W1 = r.at("W1"), &W2 = r.at("W2");
            auto eq = [&](const std::string& item, const FockState& a, const FockState& b) {
                FockState d = a - b;
                rep.add(item, d.is_zero(), d.is_zero() ? "" : "difference " + d.str());
            };
            eq("L1 + L2 = h^2/2 + ef - dh/2", L1 + L2, Rat(2) * r.at("sug"));
            eq("L2 - L1 = X11/2", L2 - L1, Rat(1, 2) * r.at("x11"));
            eq("W2 - W1 = B/12", W2 - W1, Rat(1, 12) * r.at("B"));
            eq("W1 + W2 = A'/6, A' = -2h^3 + 3h dh + 7d^2h - 15(de f - df e) - 6efh", W1 + W2, Rat(1, 6) * r.at("A'"));
            FockState dA = W1 + W2 - Rat(1, 6) * r.at("A");
            rep.data["W1+W2-A/6 with A = 2h^3 + h dh + ..."] = dA.str();
            for (int i = 1; i <= 2; ++i) {
                Realization m = make("m2", "M2", 1, r.target);
                m.images = {{"L", r.at("L" + std::to_string(i))}, {"W", r.at("W" + std::to_string(i))}};
                rep.merge(verify_embedding(m), "factor " + std::to_string(i) + ": ");
            }
            return rep;
        }
        if (r.name == "strong") {
            FockState L = wakimoto_images(r.p)[3].second;
            for (const auto& [g, s] : r.images) {
                bool ok = false;
                std::string detail;
                try {
                    Rat w = conf_weight(s, L);
                    ok = (w == Rat(2 * r.p));
                    detail = "weight " + w.str();
                } catch (const MathError& ex) {
                    detail = ex.what();
                }
                rep.add(g + " has conformal weight 2p", ok, detail);
            }
        }
        return rep;
    }
    rep.add("known OPE table", false, "no OPE table for source " + r.source);
    return rep;
}

Report verify_diagram(long p) {
    Report rep;
    rep.name = "g o mu = Phi (p=" + std::to_string(p) + ")";
    auto mu = wakimoto_images(p);
    auto phi = phi_images(p);
    for (size_t i = 0; i < mu.size(); ++i) {
        FockState lhs = apply_g(mu[i].second, p);
        bool ok = (lhs == phi[i].second);
        rep.add("g(mu(" + mu[i].first + ")) = Phi(" + phi[i].first + ")", ok,
                ok ? "" : "g(mu) = " + lhs.str() + " vs Phi = " + phi[i].second.str());
    }
    auto sp = spaces::pi0_lattice(p);
    RatVec qplus = g_vector(vec3(1, 1, 1), p);
    rep.add("g(u+v+A) = A", qplus == vec3(0, 0, 1), sp->vec_str(qplus));
    const Rat q = Rat(1, 4 * p);
    RatVec bu = vec3(Rat(1) - q, -q, Rat(1, 2 * p));
    RatVec qfms = g_vector(vec3(1, 0, 0), p);
    rep.add("g(u) = bold u + A/(2p)", qfms == bu, sp->vec_str(qfms));
    return rep;
}

} // namespace voaforge

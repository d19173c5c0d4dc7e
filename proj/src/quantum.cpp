#include "voaforge/quantum.hpp"
#include "voaforge/lattice.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace voaforge {

Variant variant_from_string(const std::string& s) {
    if (s == "a") return Variant::A;
    if (s == "s") return Variant::S;
    if (s == "uqh") return Variant::UQH;
    throw MathError("unknown variant " + s + " (expected a, s or uqh)");
}

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::A: return "a";
    case Variant::S: return "s";
    case Variant::UQH: return "uqh";
    }
    return "?";
}

int Presentation::letter(const std::string& name) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end()) throw MathError("unknown generator " + name);
    return static_cast<int>(it - alphabet.begin());
}

NCExpr Presentation::gen(const std::string& name) const { return NCExpr::letter(order, letter(name)); }

NCExpr Presentation::word(const std::string& text) const {
    std::istringstream in(text);
    std::string tok;
    NCExpr r = one();
    while (in >> tok) r = r * gen(tok);
    return r;
}

namespace {

struct Letters {
    std::string pos1, pos2, neg1, neg2;
};

Letters letters_of(Variant v) {
    if (v == Variant::UQH) return {"E1", "E2", "F1", "F2"};
    return {"x1", "x2", "x1*", "x2*"};
}

// Nichols relations on two letters; braided commutators use the positive-half braiding.
std::vector<std::pair<std::string, NCExpr>> nichols_on(const Presentation& P, int l1, int l2) {
    const int o = P.order;
    NCExpr e1 = NCExpr::letter(o, l1), e2 = NCExpr::letter(o, l2);
    const std::string n1 = P.alphabet[static_cast<size_t>(l1)], n2 = P.alphabet[static_cast<size_t>(l2)];
    const unsigned p = static_cast<unsigned>(P.p);
    std::vector<std::pair<std::string, NCExpr>> out;
    if (P.variant == Variant::S) {
        out.push_back({n1 + "^2", e1 * e1});
        out.push_back({n2 + "^2", e2 * e2});
        out.push_back({"(" + n1 + n2 + " + q^-1 " + n2 + n1 + ")^p", (e1 * e2 + P.q(-1) * (e2 * e1)).pow(p)});
        return out;
    }
    out.push_back({n1 + "^p", e1.pow(p)});
    out.push_back({n2 + "^2", e2 * e2});
    if (P.p == 2) {
        out.push_back({"(" + n1 + n2 + " - q^-1 " + n2 + n1 + ")^2", (e1 * e2 - P.q(-1) * (e2 * e1)).pow(2)});
    } else {
        out.push_back({"q-Serre " + n1 + n1 + n2,
                       e1 * e1 * e2 - (P.q(1) + P.q(-1)) * (e1 * e2 * e1) + e2 * e1 * e1});
    }
    return out;
}

NCExpr commutator(const NCExpr& a, const NCExpr& b) { return a * b - b * a; }

} // namespace

std::vector<NCExpr> Presentation::nichols_relations() const {
    Letters L = letters_of(variant);
    std::vector<NCExpr> out;
    for (auto& [label, e] : nichols_on(*this, letter(L.pos1), letter(L.pos2))) out.push_back(e);
    return out;
}

Presentation build_presentation(Variant v, long p) {
    if (p < 1) throw MathError("p must be positive");
    if (v != Variant::S && p == 1) throw MathError("variant " + variant_name(v) + " needs p >= 2");
    Presentation P;
    P.variant = v;
    P.p = p;
    P.order = static_cast<int>(2 * p);
    const bool uqh = v == Variant::UQH;
    Letters L = letters_of(v);
    P.alphabet = {L.pos1, L.pos2, L.neg1, L.neg2, "H1", "H2"};
    if (!uqh) P.alphabet.push_back("K0");
    for (const char* k : {"K1", "K1^-1", "K2", "K2^-1"}) P.alphabet.push_back(k);
    if (v == Variant::S) {
        P.cartan = {{{0, -1}, {-1, 0}}};
        P.parity = {1, 1};
    } else {
        P.cartan = {{{2, -1}, {-1, 0}}};
        P.parity = {0, 1};
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Cyclo b = P.q(P.cartan[i][j]);
            if (P.parity[i] && P.parity[j]) b = -b;
            P.braiding[i][j] = b;
        }

    const int o = P.order;
    const NCExpr one = P.one();
    const std::string pos[2] = {L.pos1, L.pos2}, neg[2] = {L.neg1, L.neg2};
    const std::string H[2] = {"H1", "H2"}, K[2] = {"K1", "K2"}, Kinv[2] = {"K1^-1", "K2^-1"};
    std::vector<Rule> rules;
    auto rule = [&](const std::string& lhs, NCExpr rhs, const std::string& label) {
        NCExpr l = P.word(lhs);
        rules.push_back(Rule{l.lead_word(), std::move(rhs), label});
    };
    auto rel = [&](const std::string& label, NCExpr e) { P.relations.push_back({label, std::move(e)}); };

    // Cartan part
    std::vector<std::string> group = {"K1", "K2"};
    if (!uqh) group.insert(group.begin(), "K0");
    rel("[H1,H2] = 0", commutator(P.gen("H1"), P.gen("H2")));
    rule("H2 H1", P.word("H1 H2"), "H order");
    for (const auto& k : {"K0", "K1", "K1^-1", "K2", "K2^-1"}) {
        if (uqh && k == std::string("K0")) continue;
        for (const auto& h : H) rule(std::string(k) + " " + h, P.word(h + " " + k), "H before K");
    }
    for (int i = 0; i < 2; ++i) {
        rel(K[i] + " " + Kinv[i] + " = 1", P.word(K[i] + " " + Kinv[i]) - one);
        rel(Kinv[i] + " " + K[i] + " = 1", P.word(Kinv[i] + " " + K[i]) - one);
        rule(K[i] + " " + Kinv[i], one, "K inverse");
        rule(Kinv[i] + " " + K[i], one, "K inverse");
        for (const auto& k : group) rel("[" + H[i] + "," + k + "] = 0", commutator(P.gen(H[i]), P.gen(k)));
    }
    for (size_t a = 0; a < group.size(); ++a)
        for (size_t b = a + 1; b < group.size(); ++b)
            rel("[" + group[a] + "," + group[b] + "] = 0", commutator(P.gen(group[a]), P.gen(group[b])));
    if (!uqh) {
        rel("K0^2 = 1", P.word("K0 K0") - one);
        rule("K0 K0", one, "K0 involution");
    }
    {
        std::vector<std::string> ks = {"K1", "K1^-1", "K2", "K2^-1"};
        if (!uqh) ks.insert(ks.begin(), "K0");
        for (size_t a = 0; a < ks.size(); ++a)
            for (size_t b = 0; b < a; ++b) {
                bool inverse = (ks[a] == "K1^-1" && ks[b] == "K1") || (ks[a] == "K2^-1" && ks[b] == "K2");
                if (inverse) continue;
                rule(ks[a] + " " + ks[b], P.word(ks[b] + " " + ks[a]), "K order");
            }
    }

    // weight conditions
    for (int sgn : {1, -1}) {
        const std::string* ys = sgn > 0 ? pos : neg;
        for (int j = 0; j < 2; ++j) {
            const std::string y = ys[j];
            NCExpr Y = P.gen(y);
            for (int i = 0; i < 2; ++i) {
                const long c = sgn * P.cartan[i][j];
                rel("[" + H[i] + "," + y + "] = " + std::to_string(c) + " " + y,
                    commutator(P.gen(H[i]), Y) - Rat(c) * Y);
                rule(H[i] + " " + y, P.word(y + " " + H[i]) + Rat(c) * Y, "weight");
                rel(K[i] + " " + y + " " + Kinv[i] + " = q^" + std::to_string(c) + " " + y,
                    P.word(K[i] + " " + y + " " + Kinv[i]) - P.q(c) * Y);
                rule(K[i] + " " + y, P.q(c) * P.word(y + " " + K[i]), "weight");
                rule(Kinv[i] + " " + y, P.q(-c) * P.word(y + " " + Kinv[i]), "weight");
            }
            if (!uqh) {
                Cyclo s = P.scalar(P.parity[j] ? Rat(-1) : Rat(1));
                rel("K0 " + y + " K0^-1 = (-1)^p(" + std::to_string(j + 1) + ") " + y,
                    P.word("K0 " + y + " K0") - s * Y);
                rule("K0 " + y, s * P.word(y + " K0"), "parity");
            }
        }
    }

    // Nichols relations on both halves
    for (const auto& half : {std::make_pair(pos[0], pos[1]), std::make_pair(neg[0], neg[1])}) {
        auto rels = nichols_on(P, P.letter(half.first), P.letter(half.second));
        std::vector<NCExpr> polys;
        for (auto& [label, e] : rels) {
            rel(label + " = 0", e);
            polys.push_back(e);
        }
        for (auto& r : complete_homogeneous(polys, static_cast<size_t>(2 * p + 4))) {
            r.label = "Nichols";
            rules.push_back(std::move(r));
        }
    }

    // linking relations
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NCExpr X = P.gen(pos[j]), Xs = P.gen(neg[i]);
            if (!uqh) {
                NCExpr d = i == j ? one - P.word(K[i] + " " + K[i]) : NCExpr(o);
                rel(neg[i] + " " + pos[j] + " - B" + std::to_string(i + 1) + std::to_string(j + 1) + " " + pos[j] +
                        " " + neg[i] + " = " + (i == j ? "1 - " + K[i] + "^2" : "0"),
                    Xs * X - P.braiding[i][j] * (X * Xs) - d);
                rule(neg[i] + " " + pos[j], P.braiding[i][j] * (X * Xs) + d, "linking");
            } else {
                // [E_j, F_i] = delta_ij (K_i - K_i^-1)/(q - q^-1), super commutator
                Cyclo s = P.scalar((P.parity[i] && P.parity[j]) ? Rat(-1) : Rat(1));
                NCExpr d = i == j ? (P.q(1) - P.q(-1)).inverse() * (P.gen(K[i]) - P.gen(Kinv[i])) : NCExpr(o);
                rel("[" + pos[j] + "," + neg[i] + "] = " + (i == j ? "(" + K[i] + " - " + Kinv[i] + ")/(q - q^-1)" : "0"),
                    X * Xs - s * (Xs * X) - d);
                rule(neg[i] + " " + pos[j], s * (X * Xs) - s * d, "EF");
            }
        }
    P.rules = RewriteSystem(std::move(rules));

    if (!uqh) {
        P.hopf = {{"Delta(H_i)", "H_i x 1 + 1 x H_i"},
                  {"Delta(K_j)", "K_j x K_j"},
                  {"Delta(x_i)", "K0^p(i) K_i x x_i + x_i x 1"},
                  {"Delta(x_i*)", "K0^p(i) K_i x x_i* + x_i* x 1"},
                  {"eps", "H_i, x_i, x_i* -> 0, K_j -> 1"},
                  {"S", "H_i -> -H_i, K_j -> K_j^-1, x_i -> -K0^p(i) K_i^-1 x_i, x_i* -> -K0^p(i) K_i^-1 x_i*"}};
    } else {
        P.hopf = {{"Delta(H_i)", "H_i x 1 + 1 x H_i"},
                  {"Delta(K_i)", "K_i x K_i"},
                  {"Delta(E_i)", "E_i x 1 + K_i^-1 x E_i"},
                  {"Delta(F_i)", "F_i x K_i + 1 x F_i"},
                  {"eps", "H_i, E_i, F_i -> 0, K_j -> 1"},
                  {"S", "H_i -> -H_i, K_j -> K_j^-1, E_i -> -K_i E_i, F_i -> -F_i K_i^-1"}};
    }
    return P;
}

NCExpr apply_map(const AlgebraMap& f, const Presentation& source, const NCExpr& e) {
    std::vector<NCExpr> images;
    for (const auto& g : source.alphabet) {
        auto it = f.images.find(g);
        if (it == f.images.end()) throw MathError("map " + f.name + " is not defined on " + g);
        images.push_back(it->second);
    }
    return substitute(e, images);
}

namespace {

// Shared shape of F and G: K0, K1, K2 -> K0, K1 K2, K2^-1 and H1, H2 -> H1 + H2, -H2.
AlgebraMap cartan_part(const std::string& name, const Presentation& t) {
    AlgebraMap m{name, {}};
    m.images["K0"] = t.gen("K0");
    m.images["K1"] = t.word("K1 K2");
    m.images["K1^-1"] = t.word("K2^-1 K1^-1");
    m.images["K2"] = t.gen("K2^-1");
    m.images["K2^-1"] = t.gen("K2");
    m.images["H1"] = t.gen("H1") + t.gen("H2");
    m.images["H2"] = -t.gen("H2");
    return m;
}

} // namespace

AlgebraMap map_F(const Presentation& a, const Presentation& s) {
    if (a.variant != Variant::A || s.variant != Variant::S || a.p != s.p) throw MathError("F maps U^a to U^s");
    AlgebraMap m = cartan_part("F", s);
    Cyclo qi = s.q(-1), dq = (s.q(1) - s.q(-1)).inverse();
    m.images["x1"] = s.word("x1* x2*") + qi * s.word("x2* x1*");
    m.images["x1*"] = -(dq * (s.word("x1 x2") + qi * s.word("x2 x1")));
    m.images["x2"] = s.gen("x2");
    m.images["x2*"] = -s.word("K2^-1 K2^-1 x2*");
    return m;
}

AlgebraMap map_G(const Presentation& s, const Presentation& a) {
    if (a.variant != Variant::A || s.variant != Variant::S || a.p != s.p) throw MathError("G maps U^s to U^a");
    AlgebraMap m = cartan_part("G", a);
    Cyclo qq = a.q(1), dq = (a.q(1) - a.q(-1)).inverse();
    m.images["x1"] = a.word("x2* x1*") - qq * a.word("x1* x2*");
    m.images["x1*"] = -(dq * (a.word("x2 x1") - qq * a.word("x1 x2")));
    m.images["x2"] = a.gen("x2");
    m.images["x2*"] = -a.word("K2^-1 K2^-1 x2*");
    return m;
}

namespace {

// F^_1 = K1^-1 x1* / (q - q^-1), F^_2 = -K2^-1 x2* / (q - q^-1).
NCExpr hat_F(const Presentation& a, int i) {
    Cyclo dq = (a.q(1) - a.q(-1)).inverse();
    if (i == 1) return dq * a.word("K1^-1 x1*");
    return -(dq * a.word("K2^-1 x2*"));
}

} // namespace

AlgebraMap map_omega(const Presentation& a) {
    if (a.variant != Variant::A) throw MathError("omega is an automorphism of U^a");
    AlgebraMap m{"omega", {}};
    m.images["K0"] = a.gen("K0");
    m.images["K1"] = a.gen("K1^-1");
    m.images["K1^-1"] = a.gen("K1");
    m.images["K2"] = a.gen("K2^-1");
    m.images["K2^-1"] = a.gen("K2");
    m.images["H1"] = -a.gen("H1");
    m.images["H2"] = -a.gen("H2");
    m.images["x1"] = hat_F(a, 1);
    m.images["x2"] = hat_F(a, 2);
    // x1* = (q - q^-1) K1 F^_1 and x2* = -(q - q^-1) K2 F^_2, with F^_1 -> E^_1 and F^_2 -> -E^_2
    Cyclo d = a.q(1) - a.q(-1);
    m.images["x1*"] = d * a.word("K1^-1 x1");
    m.images["x2*"] = d * a.word("K2^-1 x2");
    return m;
}

AlgebraMap map_uqh(const Presentation& uqh, const Presentation& a) {
    if (uqh.variant != Variant::UQH || a.variant != Variant::A || uqh.p != a.p)
        throw MathError("the uqh map goes from u_q^H(sl(2|1)) to U^a");
    AlgebraMap omega = map_omega(a);
    AlgebraMap m{"uqh", {}};
    for (const char* g : {"H1", "H2", "K1", "K1^-1", "K2", "K2^-1"}) m.images[g] = a.gen(g);
    const long budget = default_max_steps();
    for (int i = 1; i <= 2; ++i) {
        const std::string Ki = "K" + std::to_string(i), xi = "x" + std::to_string(i);
        NCExpr e = apply_map(omega, a, hat_F(a, i) * a.gen(Ki));
        if (i == 2) e = -e;
        m.images["E" + std::to_string(i)] = a.reduce(e, budget).normal;
        m.images["F" + std::to_string(i)] = a.reduce(apply_map(omega, a, a.word(Ki + "^-1 " + xi)), budget).normal;
    }
    return m;
}

Report check_morphism(const AlgebraMap& f, const Presentation& source, const Presentation& target, long maxSteps) {
    Report rep;
    rep.name = f.name + ": " + variant_name(source.variant) + " -> " + variant_name(target.variant) +
               " (p=" + std::to_string(source.p) + ")";
    long total = 0;
    for (const auto& [label, r] : source.relations) {
        Reduction red = target.reduce(apply_map(f, source, r), maxSteps);
        total += red.steps;
        if (!red.complete) rep.add_inconclusive(label, "step budget exhausted after " + std::to_string(red.steps));
        else rep.add(label, red.normal.is_zero(), red.normal.is_zero() ? "" : red.normal.str(target.alphabet));
    }
    rep.data["rewrite_steps"] = total;
    return rep;
}

Report check_inverse(const AlgebraMap& F, const AlgebraMap& G, const Presentation& source, const Presentation& target,
                     long maxSteps) {
    Report rep;
    rep.name = F.name + "/" + G.name + " inverse (p=" + std::to_string(source.p) + ")";
    auto one_side = [&](const AlgebraMap& first, const AlgebraMap& second, const Presentation& from,
                        const Presentation& via) {
        for (const auto& g : from.alphabet) {
            NCExpr img = apply_map(second, via, via.reduce(apply_map(first, from, from.gen(g)), maxSteps).normal);
            Reduction red = from.reduce(img, maxSteps);
            const std::string item = second.name + "(" + first.name + "(" + g + ")) = " + g;
            if (!red.complete) rep.add_inconclusive(item, "step budget exhausted");
            else rep.add(item, red.normal == from.gen(g), red.normal.str(from.alphabet));
        }
    };
    one_side(F, G, source, target);
    one_side(G, F, target, source);
    return rep;
}

Report expand_super_serre(long p) {
    if (p < 1) throw MathError("p must be positive");
    Report rep;
    rep.name = "super Serre expansion (p=" + std::to_string(p) + ")";
    const int o = static_cast<int>(2 * p);
    const std::vector<std::string> alpha = {"e1", "e2"};
    NCExpr e1 = NCExpr::letter(o, 0), e2 = NCExpr::letter(o, 1);
    Cyclo qi = Cyclo::zeta_pow(o, -1);
    NCExpr lhs = (e1 * e2 + qi * (e2 * e1)).pow(static_cast<unsigned>(p));
    NCExpr rhs = (e1 * e2).pow(static_cast<unsigned>(p)) - (e2 * e1).pow(static_cast<unsigned>(p));
    auto check = [&](const NCExpr& sq, const std::string& label) {
        RewriteSystem rs({Rule{{0, 0}, sq, "e1^2"}, Rule{{1, 1}, sq, "e2^2"}});
        NCExpr diff = rs.reduce(lhs - rhs, default_max_steps()).normal;
        return std::make_pair(diff.is_zero(), label + ": " + (diff.is_zero() ? "0" : diff.str(alpha)));
    };
    auto [ok, detail] = check(NCExpr(o), "difference modulo e_i^2 = 0");
    rep.add("(e1 e2 + q^-1 e2 e1)^p = (e1 e2)^p - (e2 e1)^p with e_i^2 = 0", ok, detail);
    auto [ok1, detail1] = check(NCExpr::scalar(o, Rat(1)), "difference modulo e_i^2 = 1");
    rep.data["convention"] = "e_i^2 = 0, as in the Nichols relations";
    rep.data["with_e_squared_one"] = {{"identity_holds", ok1}, {"detail", detail1}};
    return rep;
}

namespace {

// exp(pi i r) as a power of q = exp(pi i / p)
Cyclo phase(long p, const Rat& r) {
    Rat e = r * Rat(p);
    if (!e.is_integer()) throw MathError("pairing " + r.str() + " is not in (1/p)Z");
    return Cyclo::zeta_pow(static_cast<int>(2 * p), e.to_long());
}

} // namespace

Report braiding_check(long p) {
    Report rep;
    rep.name = "braiding and Cartan data (p=" + std::to_string(p) + ")";
    std::vector<Variant> vs = {Variant::S};
    if (p >= 2) vs.insert(vs.begin(), Variant::A);
    for (Variant v : vs) {
        Presentation P = build_presentation(v, p);
        const std::string tag = variant_name(v) + ": ";
        // displayed factors: parity diag and the matrix of q-powers
        const bool a = v == Variant::A;
        const int diag[2] = {a ? 1 : -1, -1};
        const long disp[2][2] = {{a ? 2 : 0, -1}, {-1, 0}};
        bool cartan_ok = true, parity_ok = true, koszul_ok = true;
        for (int i = 0; i < 2; ++i) {
            parity_ok = parity_ok && diag[i] == (P.parity[i] ? -1 : 1);
            for (int j = 0; j < 2; ++j) {
                cartan_ok = cartan_ok && disp[i][j] == P.cartan[i][j];
                Cyclo k = P.q(disp[i][j]);
                if (diag[i] < 0 && diag[j] < 0) k = -k;
                koszul_ok = koszul_ok && k == P.braiding[i][j];
            }
        }
        rep.add(tag + "second factor entries are q^{c_ij}", cartan_ok);
        rep.add(tag + "first factor is the parity", parity_ok);
        rep.add(tag + "B_ij = (-1)^{p(i)p(j)} q^{c_ij}", koszul_ok);
        // Dynkin labels q_ii and q_12 q_21
        Cyclo q12 = P.braiding[0][1] * P.braiding[1][0];
        rep.add(tag + "Dynkin labels", P.braiding[0][0] == P.q(a ? 2 : 0) * P.scalar(Rat(a ? 1 : -1)) &&
                                          P.braiding[1][1] == P.scalar(Rat(-1)) && q12 == P.q(-2));
        // lattice pairings of the screening weights
        if (a || p == 1) {
            WeightVector b1 = named_weight(a ? "beta1a" : "beta1s", p);
            WeightVector b2 = named_weight(a ? "beta2a" : "beta2s", p);
            const WeightVector* bs[2] = {&b1, &b2};
            bool lat = true;
            std::string det;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    Cyclo e = phase(p, b1.space->pair(bs[i]->c, bs[j]->c));
                    if (!(e == P.braiding[i][j])) {
                        lat = false;
                        det = "entry " + std::to_string(i + 1) + std::to_string(j + 1) + ": " + e.str();
                    }
                }
            rep.add(tag + "B_ij = exp(pi i (beta_i, beta_j))", lat, det);
        }
        json B = json::array();
        for (int i = 0; i < 2; ++i) B.push_back({P.braiding[i][0].str(), P.braiding[i][1].str()});
        rep.data[variant_name(v)] = {{"braiding", B},
                                     {"cartan", {{P.cartan[0][0], P.cartan[0][1]}, {P.cartan[1][0], P.cartan[1][1]}}},
                                     {"parity", {P.parity[0], P.parity[1]}}};
    }
    return rep;
}

Report nichols_check(Variant v, long p) {
    Presentation P = build_presentation(v, p);
    Report rep;
    rep.name = "Nichols relations " + variant_name(v) + " (p=" + std::to_string(p) + ")";
    Letters L = letters_of(v);
    const size_t maxLen = static_cast<size_t>(4 * p + 2);
    for (const auto& half : {std::make_pair(L.pos1, L.pos2), std::make_pair(L.neg1, L.neg2)}) {
        auto words = irreducible_words(P.rules, {P.letter(half.first), P.letter(half.second)}, maxLen);
        size_t top = 0;
        for (const auto& w : words) top = std::max(top, w.size());
        const bool finite = top < maxLen;
        rep.add("PBW dimension on {" + half.first + ", " + half.second + "} is 4p",
                finite && words.size() == static_cast<size_t>(4 * p),
                std::to_string(words.size()) + " irreducible words, top degree " + std::to_string(top));
        rep.data["dimension_" + half.first + half.second] = words.size();
    }
    for (const auto& [label, r] : P.relations) {
        if (label.find('^') == std::string::npos && label.find("Serre") == std::string::npos) continue;
        if (label.find(" = 0") == std::string::npos || label.front() == '[') continue;
        Reduction red = P.reduce(r);
        rep.add("rule set kills " + label, red.complete && red.normal.is_zero());
    }
    if (v != Variant::S && p == 2) {
        const int o = P.order;
        const int x1 = P.letter(L.pos1), x2 = P.letter(L.pos2);
        NCExpr e1 = NCExpr::letter(o, x1), e2 = NCExpr::letter(o, x2);
        RewriteSystem squares(complete_homogeneous({e1 * e1, e2 * e2}, 8));
        NCExpr serre = e1 * e1 * e2 - (P.q(1) + P.q(-1)) * (e1 * e2 * e1) + e2 * e1 * e1;
        NCExpr repl = (e1 * e2 - P.q(-1) * (e2 * e1)).pow(2);
        rep.add("q-Serre relation is trivial at p=2", squares.reduce(serre, default_max_steps()).normal.is_zero());
        rep.add("replacement relation is independent of the squares",
                !squares.reduce(repl, default_max_steps()).normal.is_zero());
        rep.add("replacement relation is active", P.reduce(repl).normal.is_zero());
    }
    json rules = json::array();
    for (const auto& r : P.rules.rules())
        if (r.label == "Nichols") {
            NCExpr lhs = NCExpr::word(P.order, r.lhs, P.scalar(Rat(1)));
            rules.push_back(lhs.str(P.alphabet) + " -> " + r.rhs.str(P.alphabet));
        }
    rep.data["nichols_rules"] = rules;
    return rep;
}

Report confluence_check(const Presentation& P, int samples, size_t maxLen, unsigned seed, long maxSteps) {
    Report rep;
    rep.name = "rewriting confluence " + variant_name(P.variant) + " (p=" + std::to_string(P.p) + ")";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> len(1, maxLen);
    std::uniform_int_distribution<int> let(0, static_cast<int>(P.alphabet.size()) - 1);
    Letters L = letters_of(P.variant);
    const int pos[2] = {P.letter(L.pos1), P.letter(L.pos2)}, neg[2] = {P.letter(L.neg1), P.letter(L.neg2)};
    auto grade = [&](const Word& w) {
        std::array<long, 2> g{0, 0};
        for (int c : w)
            for (int i = 0; i < 2; ++i) g[i] += (c == pos[i]) - (c == neg[i]);
        return g;
    };
    int agree = 0, graded = 0, inconclusive = 0;
    std::string first_bad;
    for (int k = 0; k < samples; ++k) {
        Word w(len(rng));
        for (auto& c : w) c = let(rng);
        NCExpr e = NCExpr::word(P.order, w, P.scalar(Rat(1)));
        Reduction l = P.reduce(e, maxSteps, Strategy::Leftmost);
        Reduction r = P.reduce(e, maxSteps, Strategy::Rightmost);
        if (!l.complete || !r.complete) {
            ++inconclusive;
            continue;
        }
        if (l.normal == r.normal) ++agree;
        else if (first_bad.empty()) first_bad = e.str(P.alphabet);
        bool g = true;
        for (const auto& [nw, c] : l.normal.terms()) g = g && grade(nw) == grade(w);
        graded += g;
    }
    const int decided = samples - inconclusive;
    rep.add("leftmost and rightmost rewriting agree", agree == decided,
            std::to_string(agree) + "/" + std::to_string(decided) + (first_bad.empty() ? "" : ", first: " + first_bad));
    rep.add("root grading preserved", graded == decided);
    if (inconclusive) rep.add_inconclusive("step budget", std::to_string(inconclusive) + " words exhausted the budget");
    rep.data["samples"] = samples;
    rep.data["max_length"] = maxLen;
    rep.data["seed"] = seed;
    return rep;
}

namespace {

// Elements of A x A with the ordinary (bosonized) product.
struct Tensor {
    int order = 2;
    std::map<std::pair<Word, Word>, Cyclo> terms;

    void add(const Word& a, const Word& b, const Cyclo& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(std::make_pair(a, b), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    static Tensor pure(const NCExpr& a, const NCExpr& b) {
        Tensor t{a.order(), {}};
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, ca * cb);
        return t;
    }
    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
        return *this;
    }
    friend Tensor operator*(const Tensor& x, const Tensor& y) {
        Tensor r{x.order, {}};
        for (const auto& [kx, cx] : x.terms)
            for (const auto& [ky, cy] : y.terms) {
                Word a = kx.first, b = kx.second;
                a.insert(a.end(), ky.first.begin(), ky.first.end());
                b.insert(b.end(), ky.second.begin(), ky.second.end());
                r.add(a, b, cx * cy);
            }
        return r;
    }
};

Tensor coproduct_letter(const Presentation& P, int g) {
    const std::string& n = P.alphabet[static_cast<size_t>(g)];
    NCExpr G = NCExpr::letter(P.order, g);
    const NCExpr one = P.one();
    if (n[0] == 'H') {
        Tensor t = Tensor::pure(G, one);
        t += Tensor::pure(one, G);
        return t;
    }
    if (n[0] == 'K') return Tensor::pure(G, G);
    const int i = n[1] - '1';
    NCExpr lead = P.gen(i == 0 ? "K1" : "K2");
    if (P.parity[i]) lead = P.gen("K0") * lead;
    Tensor t = Tensor::pure(lead, G);
    t += Tensor::pure(G, one);
    return t;
}

Tensor coproduct(const Presentation& P, const NCExpr& e) {
    Tensor out{P.order, {}};
    for (const auto& [w, c] : e.terms()) {
        Tensor t = Tensor::pure(NCExpr::scalar(P.order, c), P.one());
        for (int g : w) t = t * coproduct_letter(P, g);
        out += t;
    }
    return out;
}

// Normal form factorwise; complete is false if either factor ran out of budget.
std::pair<Tensor, bool> reduce_tensor(const Presentation& P, const Tensor& t, long maxSteps) {
    Tensor out{P.order, {}};
    bool complete = true;
    for (const auto& [k, c] : t.terms) {
        Reduction a = P.reduce(NCExpr::word(P.order, k.first, c), maxSteps);
        Reduction b = P.reduce(NCExpr::word(P.order, k.second, P.scalar(Rat(1))), maxSteps);
        complete = complete && a.complete && b.complete;
        out += Tensor::pure(a.normal, b.normal);
    }
    return {out, complete};
}

Tensor map_tensor(const AlgebraMap& f, const Presentation& src, const Tensor& t) {
    Tensor out{t.order, {}};
    for (const auto& [k, c] : t.terms) {
        NCExpr a = apply_map(f, src, NCExpr::word(t.order, k.first, c));
        NCExpr b = apply_map(f, src, NCExpr::word(t.order, k.second, Cyclo(t.order, Rat(1))));
        out += Tensor::pure(a, b);
    }
    return out;
}

} // namespace

Report coproduct_twist_check(long p, long maxSteps) {
    if (p < 3) throw MathError("the F/G isomorphisms need p >= 3");
    Presentation A = build_presentation(Variant::A, p), S = build_presentation(Variant::S, p);
    AlgebraMap F = map_F(A, S);
    Report rep;
    rep.name = "coproduct twist (p=" + std::to_string(p) + ")";
    for (const Presentation* P : {&A, &S}) {
        int bad = 0, inc = 0;
        std::string first;
        for (const auto& [label, r] : P->relations) {
            auto [t, complete] = reduce_tensor(*P, coproduct(*P, r), maxSteps);
            if (!complete) ++inc;
            else if (!t.terms.empty()) {
                ++bad;
                if (first.empty()) first = label;
            }
        }
        const std::string item = "Delta respects the relations of U^" + variant_name(P->variant);
        if (inc) rep.add_inconclusive(item, std::to_string(inc) + " relations exhausted the budget");
        else rep.add(item, bad == 0, first);
    }
    Tensor Phi = Tensor::pure(S.one(), S.one());
    Phi += Tensor::pure(-S.word("K0 K2^-1 x2*"), S.gen("x2"));
    for (const auto& g : A.alphabet) {
        Tensor lhs = coproduct(S, S.reduce(apply_map(F, A, A.gen(g)), maxSteps).normal) * Phi;
        Tensor rhs = Phi * map_tensor(F, A, coproduct(A, A.gen(g)));
        auto [l, cl] = reduce_tensor(S, lhs, maxSteps);
        auto [r, cr] = reduce_tensor(S, rhs, maxSteps);
        const std::string item = "Delta(F(" + g + ")) Phi = Phi (F x F)(Delta(" + g + "))";
        if (!cl || !cr) rep.add_inconclusive(item, "step budget exhausted");
        else rep.add(item, l.terms == r.terms);
    }
    return rep;
}

} // namespace voaforge

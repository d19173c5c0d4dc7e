#include "voaforge/c2.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace voaforge {

bool grlex_greater(const Exponent& a, const Exponent& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
}

VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

CommPoly CommPoly::constant(VarList vars, const Rat& c) {
    CommPoly p(vars);
    p.add(Exponent(p.nvars(), 0), c);
    return p;
}

CommPoly CommPoly::variable(VarList vars, size_t i) {
    CommPoly p(vars);
    Exponent e(p.nvars(), 0);
    e.at(i) = 1;
    p.add(e, Rat(1));
    return p;
}

CommPoly CommPoly::variable(VarList vars, const std::string& name) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end()) throw MathError("unknown variable " + name);
    return variable(vars, static_cast<size_t>(it - vars->begin()));
}

CommPoly CommPoly::monomial(VarList vars, const Rat& c, Exponent e) {
    CommPoly p(vars);
    if (e.size() != p.nvars()) throw MathError("exponent length does not match the variables");
    p.add(e, c);
    return p;
}

const Exponent& CommPoly::lead_exp() const {
    if (terms_.empty()) throw MathError("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Rat& CommPoly::lead_coeff() const {
    if (terms_.empty()) throw MathError("leading term of the zero polynomial");
    return terms_.begin()->second;
}

int CommPoly::total_degree() const {
    return terms_.empty() ? -1 : std::accumulate(lead_exp().begin(), lead_exp().end(), 0);
}

bool CommPoly::homogeneous() const {
    const int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

void CommPoly::add(const Exponent& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    if (!vars_) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r(a.vars_ ? a.vars_ : b.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

CommPoly operator*(const Rat& c, CommPoly a) {
    if (c.is_zero()) return CommPoly(a.vars_);
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
}

CommPoly CommPoly::pow(unsigned n) const {
    CommPoly r = constant(vars_, Rat(1));
    CommPoly b = *this;
    while (n) {
        if (n & 1u) r = r * b;
        n >>= 1u;
        if (n) b = b * b;
    }
    return r;
}

CommPoly CommPoly::derivative(size_t i) const {
    CommPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        --f[i];
        r.add(f, c * Rat(e[i]));
    }
    return r;
}

CommPoly CommPoly::substitute(const std::vector<CommPoly>& images) const {
    if (images.size() != nvars()) throw MathError("substitution needs one image per variable");
    VarList target = images.empty() ? vars_ : images[0].vars();
    CommPoly r(target);
    for (const auto& [e, c] : terms_) {
        CommPoly t = constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * images[i].pow(static_cast<unsigned>(e[i]));
        r += t;
    }
    return r;
}

std::string CommPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += (*vars_)[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += a.str();
        else if (a == Rat(1)) out += mono;
        else out += a.str() + "*" + mono;
    }
    return out;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponent minus(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

CommPoly spoly(const CommPoly& f, const CommPoly& g) {
    Exponent l = lcm(f.lead_exp(), g.lead_exp());
    CommPoly mf = CommPoly::monomial(f.vars(), Rat(1) / f.lead_coeff(), minus(l, f.lead_exp()));
    CommPoly mg = CommPoly::monomial(g.vars(), Rat(1) / g.lead_coeff(), minus(l, g.lead_exp()));
    return mf * f - mg * g;
}

CommPoly monic(const CommPoly& f) { return f.is_zero() ? f : (Rat(1) / f.lead_coeff()) * f; }

} // namespace

CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& G) {
    CommPoly rem(f.vars());
    CommPoly p = f;
    while (!p.is_zero()) {
        const Exponent lt = p.lead_exp();
        const Rat lc = p.lead_coeff();
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero() || !divides(g.lead_exp(), lt)) continue;
            p -= CommPoly::monomial(f.vars(), lc / g.lead_coeff(), minus(lt, g.lead_exp())) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add(lt, lc);
            p.add(lt, -lc);
        }
    }
    return rem;
}

std::vector<CommPoly> groebner(const std::vector<CommPoly>& gens) {
    std::vector<CommPoly> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(monic(g));
    std::set<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < G.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.insert({i, j});
    while (!pairs.empty()) {
        // select the pair with the smallest lcm
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it) {
            Exponent a = lcm(G[it->first].lead_exp(), G[it->second].lead_exp());
            Exponent b = lcm(G[best->first].lead_exp(), G[best->second].lead_exp());
            if (grlex_greater(b, a)) best = it;
        }
        auto [i, j] = *best;
        pairs.erase(best);
        const Exponent& li = G[i].lead_exp();
        const Exponent& lj = G[j].lead_exp();
        if (coprime(li, lj)) continue;
        Exponent l = lcm(li, lj);
        bool chain = false;
        for (size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !divides(G[k].lead_exp(), l)) continue;
            auto key = [](size_t x, size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
            chain = !pairs.count(key(i, k)) && !pairs.count(key(j, k));
        }
        if (chain) continue;
        CommPoly r = normal_form(spoly(G[i], G[j]), G);
        if (r.is_zero()) continue;
        G.push_back(monic(r));
        for (size_t k = 0; k + 1 < G.size(); ++k) pairs.insert({k, G.size() - 1});
    }
    // minimal basis
    std::vector<CommPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || !divides(G[j].lead_exp(), G[i].lead_exp())) continue;
            redundant = (G[j].lead_exp() != G[i].lead_exp()) || j < i;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // reduce tails
    std::vector<CommPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<CommPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        CommPoly lead = CommPoly::monomial(minimal[i].vars(), Rat(1), minimal[i].lead_exp());
        CommPoly tail = minimal[i] - lead;
        reduced.push_back(lead + normal_form(tail, others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const CommPoly& a, const CommPoly& b) { return grlex_greater(b.lead_exp(), a.lead_exp()); });
    return reduced;
}

bool ideal_member(const CommPoly& f, const std::vector<CommPoly>& G) { return normal_form(f, G).is_zero(); }

bool is_groebner(const std::vector<CommPoly>& G) {
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j)
            if (!normal_form(spoly(G[i], G[j]), G).is_zero()) return false;
    return true;
}

bool ideals_equal(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b) {
    auto ga = groebner(a), gb = groebner(b);
    for (const auto& f : a)
        if (!ideal_member(f, gb)) return false;
    for (const auto& f : b)
        if (!ideal_member(f, ga)) return false;
    return true;
}

CommPoly Derivation::apply(const CommPoly& f) const {
    CommPoly r(f.vars());
    for (size_t i = 0; i < images.size(); ++i) {
        CommPoly d = f.derivative(i);
        if (!d.is_zero()) r += d * images[i];
    }
    return r;
}

CommPoly PoissonTable::bracket(const CommPoly& f, const CommPoly& g) const {
    CommPoly r(f.vars());
    const size_t n = table.size();
    for (size_t i = 0; i < n; ++i) {
        CommPoly fi = f.derivative(i);
        if (fi.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (table[i][j].is_zero()) continue;
            CommPoly gj = g.derivative(j);
            if (!gj.is_zero()) r += fi * gj * table[i][j];
        }
    }
    return r;
}

Derivation PoissonTable::adjoint(const CommPoly& f) const {
    Derivation D;
    const size_t n = table.size();
    for (size_t j = 0; j < n; ++j) D.images.push_back(bracket(f, CommPoly::variable(f.vars(), j)));
    return D;
}

VarList sl2_vars() {
    static VarList v = make_vars({"h", "e", "f", "a"});
    return v;
}

PoissonTable sl2_poisson() {
    auto v = sl2_vars();
    CommPoly z(v), h = CommPoly::variable(v, "h"), e = CommPoly::variable(v, "e"), f = CommPoly::variable(v, "f");
    return PoissonTable{{{z, Rat(2) * e, Rat(-2) * f, z}, {Rat(-2) * e, z, h, z}, {Rat(2) * f, -h, z, z}, {z, z, z, z}}};
}

VarList bga_vars() {
    static VarList v = make_vars({"a", "beta", "gamma"});
    return v;
}

PoissonTable bga_poisson() {
    auto v = bga_vars();
    CommPoly z(v), one = CommPoly::constant(v, Rat(1));
    return PoissonTable{{{z, z, z}, {z, z, one}, {z, -one, z}}};
}

CommPoly c2_map(const CommPoly& f) {
    auto v = bga_vars();
    CommPoly a = CommPoly::variable(v, "a"), b = CommPoly::variable(v, "beta"), g = CommPoly::variable(v, "gamma");
    CommPoly h_img = Rat(-2) * b * g - a;
    CommPoly e_img = b;
    CommPoly f_img = -(b * g * g) - g * a;
    return f.substitute({h_img, e_img, f_img, a});
}

CommPoly casimir() {
    auto v = sl2_vars();
    CommPoly h = CommPoly::variable(v, "h"), e = CommPoly::variable(v, "e"), f = CommPoly::variable(v, "f");
    return h * h + Rat(4) * e * f;
}

std::vector<CommPoly> nilpotent_family_sl2(long p) {
    if (p < 1) throw MathError("p must be positive");
    auto v = sl2_vars();
    CommPoly ap = CommPoly::variable(v, "a").pow(static_cast<unsigned>(2 * p - 1));
    CommPoly x01 = CommPoly::variable(v, "e") * ap;
    CommPoly x11 = -(CommPoly::variable(v, "h") * ap);
    CommPoly x21 = Rat(-2) * (CommPoly::variable(v, "f") * ap);
    return {x01 * x01, x01 * x11, x11 * x11 + x01 * x21, x11 * x21, x21 * x21};
}

std::vector<CommPoly> nilpotent_family(long p) {
    std::vector<CommPoly> out;
    for (const auto& x : nilpotent_family_sl2(p)) out.push_back(c2_map(x));
    return out;
}

std::vector<CommPoly> target_ideal(long p) {
    auto v = bga_vars();
    const int n = static_cast<int>(4 * p);
    return {CommPoly::monomial(v, Rat(1), {n, 0, 0}), CommPoly::monomial(v, Rat(1), {n - 1, 1, 0}),
            CommPoly::monomial(v, Rat(1), {n - 2, 2, 0})};
}

Report derivation_nilpotency(const std::vector<CommPoly>& ideal, const Derivation& D, const CommPoly& a, unsigned N) {
    auto G = groebner(ideal);
    for (const auto& g : ideal)
        if (!ideal_member(D.apply(g), G)) throw MathError("the derivation does not preserve the ideal: D(" + g.str() + ") is not a member");
    if (!ideal_member(a.pow(N), G)) throw MathError("precondition failed: a^" + std::to_string(N) + " is not in the ideal");
    Report rep;
    rep.name = "derivation nilpotency";
    CommPoly Da = D.apply(a);
    rep.add("(Da)^" + std::to_string(N * N) + " in ideal", ideal_member(Da.pow(N * N), G), "Da = " + Da.str());
    return rep;
}

Report c2_ideal_equality(long p) {
    Report rep;
    rep.name = "C2 ideal equality (p=" + std::to_string(p) + ")";
    auto five = nilpotent_family(p);
    auto I = target_ideal(p);
    auto G5 = groebner(five), GI = groebner(I);
    bool hom = true;
    for (const auto& f : nilpotent_family_sl2(p)) hom = hom && f.homogeneous() && f.total_degree() == 4 * p;
    rep.add("five elements homogeneous of degree 4p in S(sl2)[a]", hom);
    rep.add("Groebner basis passes the S-polynomial criterion", is_groebner(G5) && is_groebner(GI));
    bool sub1 = true, sub2 = true;
    std::string d1, d2;
    for (const auto& f : five)
        if (!ideal_member(f, GI)) {
            sub1 = false;
            d1 = f.str();
        }
    for (const auto& f : I)
        if (!ideal_member(f, G5)) {
            sub2 = false;
            d2 = f.str();
        }
    rep.add("<five> in I", sub1, d1);
    rep.add("I in <five>", sub2, d2);
    json gb = json::array();
    for (const auto& g : G5) gb.push_back(g.str());
    rep.data["groebner_basis"] = gb;
    return rep;
}

Report c2_casimir(long p) {
    Report rep;
    rep.name = "C2 Casimir (p=" + std::to_string(p) + ")";
    auto v = bga_vars();
    CommPoly a = CommPoly::variable(v, "a");
    // alpha = sqrt(p) a, so alpha^2 = p a^2
    CommPoly lhs = Rat(p) * c2_map(casimir());
    CommPoly alpha_sq = Rat(p) * a * a;
    rep.add("p c2(Omega) = alpha^2", lhs == alpha_sq, lhs.str());
    auto G = groebner(nilpotent_family(p));
    CommPoly om = c2_map(casimir());
    rep.add("c2(Omega) not in <five>", !ideal_member(om, G));
    long m = 1;
    while (m <= 8 * p && !ideal_member(om.pow(static_cast<unsigned>(m)), G)) ++m;
    rep.add("some power of c2(Omega) in <five>", m <= 8 * p, "least power " + std::to_string(m));
    rep.data["least_casimir_power"] = m;
    return rep;
}

Report c2_nilpotency(long p) {
    Report rep;
    rep.name = "derivation nilpotency (p=" + std::to_string(p) + ")";
    auto five = nilpotent_family(p);
    auto G = groebner(five);
    auto v = bga_vars();
    auto sv = sl2_vars();
    CommPoly ap = CommPoly::variable(sv, "a").pow(static_cast<unsigned>(2 * p - 1));
    std::vector<std::pair<std::string, CommPoly>> xs = {
        {"x01", c2_map(CommPoly::variable(sv, "e") * ap)},
        {"x11", c2_map(-(CommPoly::variable(sv, "h") * ap))},
        {"x21", c2_map(Rat(-2) * (CommPoly::variable(sv, "f") * ap))},
    };
    const char* labels[] = {"x01^2", "x01 x11", "x11^2 + x01 x21", "x11 x21", "x21^2"};
    for (size_t i = 0; i < five.size(); ++i) xs.push_back({labels[i], five[i]});
    std::vector<std::pair<std::string, Derivation>> ds = {
        {"{c2(f), -}", bga_poisson().adjoint(c2_map(CommPoly::variable(sv, "f")))},
        {"{c2(e), -}", bga_poisson().adjoint(c2_map(CommPoly::variable(sv, "e")))},
    };
    for (const auto& [xn, x] : xs) {
        unsigned N = 1;
        while (N <= 8 && !ideal_member(x.pow(N), G)) ++N;
        if (N > 8) {
            rep.add(xn + " nilpotent modulo <five>", false, "no power up to 8 lies in the ideal");
            continue;
        }
        for (const auto& [dn, D] : ds) {
            try {
                Report r = derivation_nilpotency(five, D, x, N);
                rep.add(dn + " applied to " + xn + ", N=" + std::to_string(N), r.passed(), r.first_problem());
            } catch (const MathError& e) {
                rep.add(dn + " applied to " + xn, false, e.what());
            }
        }
    }
    return rep;
}

} // namespace voaforge

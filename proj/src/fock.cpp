#include "voaforge/fock.hpp"

#include <algorithm>
#include <sstream>

namespace voaforge {

namespace {

using Terms = std::map<Mono, Rat>;
using CreationPoly = std::map<ModeList, Rat>;

void add_to(Terms& t, const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void add_to(CreationPoly& t, const ModeList& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

void insert_mode(ModeList& ml, Mode m) { ml.insert(std::upper_bound(ml.begin(), ml.end(), m), m); }

ModeList merge_modes(const ModeList& a, const ModeList& b) {
    ModeList out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// x_m for m > 0 acting on the terms; xd is the functional (x, .) in coordinates.
Terms annihilate(const RatVec& xd, int m, const Terms& in) {
    Terms out;
    for (const auto& [mono, c] : in) {
        for (size_t i = 0; i < mono.modes.size(); ++i) {
            const Mode& md = mono.modes[i];
            if (md.depth != m) continue;
            const Rat& w = xd[md.gen];
            if (w.is_zero()) continue;
            Mono nm{mono.mom, mono.modes};
            nm.modes.erase(nm.modes.begin() + static_cast<long>(i));
            add_to(out, nm, c * w * Rat(m));
        }
    }
    return out;
}

Terms zero_mode(const RatVec& xd, const Terms& in) {
    Terms out;
    for (const auto& [mono, c] : in) {
        Rat s(0);
        for (size_t i = 0; i < xd.size(); ++i)
            if (!xd[i].is_zero()) s += xd[i] * mono.mom[i];
        add_to(out, mono, c * s);
    }
    return out;
}

int max_degree(const Terms& t) {
    int d = 0;
    for (const auto& [m, c] : t) d = std::max(d, m.degree());
    return d;
}

void accumulate(std::map<long, Terms>& dst, long power, const Terms& t, const Rat& scale) {
    if (t.empty()) return;
    Terms& slot = dst[power];
    for (const auto& [m, c] : t) add_to(slot, m, c * scale);
    if (slot.empty()) dst.erase(power);
}

// Powers of z carried by E^+(x, z) = exp(-sum_{j>0} x_j z^{-j} / j) applied to t.
std::map<long, Terms> apply_e_plus(const RatVec& xd, const Terms& t) {
    std::map<long, Terms> out;
    std::vector<Terms> b;
    b.push_back(t);
    out[0] = t;
    const int deg = max_degree(t);
    for (int d = 1; d <= deg; ++d) {
        Terms bd;
        for (int j = 1; j <= d; ++j) {
            if (b[d - j].empty()) continue;
            Terms part = annihilate(xd, j, b[d - j]);
            for (const auto& [m, c] : part) add_to(bd, m, c * Rat(-1, d));
        }
        b.push_back(bd);
        if (!bd.empty()) out[-d] = bd;
    }
    return out;
}

// The positive part of d^{n-1} g(z)/(n-1)!, i.e. sum_{m>=0} C(-m-1, n-1) g_m z^{-m-n}.
std::map<long, Terms> apply_field_plus(const RatVec& gd, int n, const std::map<long, Terms>& in) {
    std::map<long, Terms> out;
    for (const auto& [power, t] : in) {
        accumulate(out, power - n, zero_mode(gd, t), binomial(Rat(-1), n - 1));
        const int deg = max_degree(t);
        for (int m = 1; m <= deg; ++m) {
            Rat coef = binomial(Rat(-m - 1), n - 1);
            accumulate(out, power - m - n, annihilate(gd, m, t), coef);
        }
    }
    return out;
}

// Creation polynomials C_0..C_maxD for E^-(x, z) times the negative parts of the given factors.
std::vector<CreationPoly> creation_polys(const RatVec& x, const ModeList& factors, int maxD) {
    std::vector<CreationPoly> s(maxD + 1);
    s[0][{}] = Rat(1);
    for (int e = 1; e <= maxD; ++e) {
        for (int j = 1; j <= e; ++j) {
            for (const auto& [ml, c] : s[e - j]) {
                for (size_t g = 0; g < x.size(); ++g) {
                    if (x[g].is_zero()) continue;
                    ModeList nm = ml;
                    insert_mode(nm, Mode{static_cast<int>(g), j});
                    add_to(s[e], nm, c * x[g] / Rat(e));
                }
            }
        }
    }
    for (const Mode& f : factors) {
        std::vector<CreationPoly> next(maxD + 1);
        for (int a = 0; a <= maxD; ++a) {
            for (const auto& [ml, c] : s[a]) {
                for (int d = 0; a + d <= maxD; ++d) {
                    ModeList nm = ml;
                    insert_mode(nm, Mode{f.gen, d + f.depth});
                    add_to(next[a + d], nm, c * binomial(Rat(d + f.depth - 1), f.depth - 1));
                }
            }
        }
        s = std::move(next);
    }
    return s;
}

} // namespace

int Mono::degree() const {
    int d = 0;
    for (const auto& m : modes) d += m.depth;
    return d;
}

FockState FockState::vacuum(SpacePtr s) {
    FockState f(s);
    f.add(Mono{s->zero(), {}}, Rat(1));
    return f;
}

FockState FockState::exp(SpacePtr s, const RatVec& mom) {
    FockState f(s);
    if (mom.size() != s->dim()) throw MathError("momentum dimension mismatch");
    f.add(Mono{mom, {}}, Rat(1));
    return f;
}

FockState FockState::mono(SpacePtr s, const Rat& c, Mono m) {
    FockState f(s);
    std::sort(m.modes.begin(), m.modes.end());
    f.add(m, c);
    return f;
}

void FockState::add(const Mono& m, const Rat& c) { add_to(terms_, m, c); }

void FockState::check_space(const FockState& o) const {
    if (space_ && o.space_ && space_ != o.space_ &&
        (space_->names() != o.space_->names() || space_->gram() != o.space_->gram()))
        throw MathError("states live in different spaces");
}

FockState& FockState::operator+=(const FockState& o) {
    check_space(o);
    if (!space_) space_ = o.space_;
    for (const auto& [m, c] : o.terms_) add_to(terms_, m, c);
    return *this;
}

FockState& FockState::operator-=(const FockState& o) {
    check_space(o);
    if (!space_) space_ = o.space_;
    for (const auto& [m, c] : o.terms_) add_to(terms_, m, -c);
    return *this;
}

FockState& FockState::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

FockState FockState::create(int gen, int depth) const {
    FockState out(space_);
    for (const auto& [m, c] : terms_) {
        Mono nm = m;
        insert_mode(nm.modes, Mode{gen, depth});
        out.add(nm, c);
    }
    return out;
}

FockState FockState::create(const RatVec& x, int depth) const {
    FockState out(space_);
    for (size_t g = 0; g < x.size(); ++g)
        if (!x[g].is_zero()) out += x[g] * create(static_cast<int>(g), depth);
    return out;
}

std::string FockState::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string body;
        for (const auto& md : m.modes) {
            if (!body.empty()) body += " ";
            body += space_->names()[md.gen] + "[-" + std::to_string(md.depth) + "]";
        }
        bool zero_mom = std::all_of(m.mom.begin(), m.mom.end(), [](const Rat& r) { return r.is_zero(); });
        if (!zero_mom) {
            if (!body.empty()) body += " ";
            body += "e^{" + space_->vec_str(m.mom) + "}";
        }
        Rat a = c.abs();
        std::string coef;
        if (body.empty()) coef = a.str();
        else if (a != Rat(1)) coef = a.str() + " ";
        if (out.empty()) out = (c.sign() < 0 ? "-" : "") + coef + body;
        else out += (c.sign() < 0 ? " - " : " + ") + coef + body;
    }
    return out;
}

FockState mode_act(const RatVec& x, int n, const FockState& s) {
    if (n < 0) return s.create(x, -n);
    RatVec xd = s.space()->dual(x);
    FockState out(s.space());
    Terms in(s.terms().begin(), s.terms().end());
    Terms r = (n == 0) ? zero_mode(xd, in) : annihilate(xd, n, in);
    for (const auto& [m, c] : r) out.add(m, c);
    return out;
}

FockState mode_act(int gen, int n, const FockState& s) { return mode_act(s.space()->unit(gen), n, s); }

FockState translate(const FockState& s) {
    FockState out(s.space());
    for (const auto& [m, c] : s.terms()) {
        Mono base = m;
        FockState one = FockState::mono(s.space(), c, base).create(m.mom, 1);
        out += one;
        for (size_t i = 0; i < m.modes.size(); ++i) {
            Mono nm = m;
            Mode md = nm.modes[i];
            nm.modes.erase(nm.modes.begin() + static_cast<long>(i));
            insert_mode(nm.modes, Mode{md.gen, md.depth + 1});
            out.add(nm, c * Rat(md.depth));
        }
    }
    return out;
}

FockState translate_div(const FockState& s, int j) {
    FockState t = s;
    for (int i = 1; i <= j; ++i) t = Rat(1, i) * translate(t);
    return t;
}

FockState field_coeff(const FockState& a, const Rat& k, const FockState& b) {
    const SpacePtr& sp = b.space() ? b.space() : a.space();
    FockState out(sp);
    if (a.is_zero() || b.is_zero()) return out;
    if (a.space() && b.space() && a.space()->names() != b.space()->names()) throw MathError("states live in different spaces");
    for (const auto& [ma, ca] : a.terms()) {
        const RatVec& x = ma.mom;
        const RatVec xd = sp->dual(x);
        const size_t nf = ma.modes.size();
        if (nf > 20) throw MathError("too many factors in a field");
        std::vector<RatVec> fdual;
        for (const auto& f : ma.modes) fdual.push_back(sp->dual(sp->unit(f.gen)));
        // Each factor field splits into a creation half (left) and an annihilation half (right).
        std::vector<std::vector<CreationPoly>> cpolys(size_t(1) << nf);
        for (const auto& [mb, cb] : b.terms()) {
            const RatVec& lam = mb.mom;
            Rat s = sp->pair(x, lam);
            Rat dd = k - s;
            if (!dd.is_integer())
                throw MathError("non-integral z-power: (" + sp->vec_str(x) + ", " + sp->vec_str(lam) + ") = " + s.str() +
                                " against requested power " + k.str());
            const long D = dd.to_long();
            Terms start;
            start.emplace(mb, cb * ca);
            const std::map<long, Terms> plus = apply_e_plus(xd, start);
            const int eps = sp->cocycle(x, lam);
            RatVec newmom = lam;
            for (size_t i = 0; i < newmom.size(); ++i) newmom[i] += x[i];
            for (size_t mask = 0; mask < (size_t(1) << nf); ++mask) {
                std::map<long, Terms> stage = plus;
                ModeList created;
                for (size_t i = 0; i < nf; ++i) {
                    if (mask & (size_t(1) << i)) created.push_back(ma.modes[i]);
                    else stage = apply_field_plus(fdual[i], ma.modes[i].depth, stage);
                }
                long need = -1;
                for (const auto& [P, t] : stage)
                    if (P <= D) need = std::max(need, D - P);
                if (need < 0) continue;
                auto& cp_cache = cpolys[mask];
                if (static_cast<long>(cp_cache.size()) <= need)
                    cp_cache = creation_polys(x, created, static_cast<int>(need));
                for (const auto& [P, t] : stage) {
                    if (P > D) continue;
                    const CreationPoly& cp = cp_cache[D - P];
                    for (const auto& [mono, c] : t) {
                        for (const auto& [ml, cc] : cp) {
                            Mono nm{newmom, merge_modes(mono.modes, ml)};
                            out.add(nm, eps < 0 ? -(c * cc) : c * cc);
                        }
                    }
                }
            }
        }
    }
    return out;
}

FockState lattice_coeff(const RatVec& x, const Rat& k, const FockState& s) {
    return field_coeff(FockState::exp(s.space(), x), k, s);
}

FockState nth_product(const FockState& a, long n, const FockState& b) { return field_coeff(a, Rat(-n - 1), b); }

long max_pole(const FockState& a, const FockState& b) {
    long hi = -1;
    if (a.is_zero() || b.is_zero()) return -1;
    const SpacePtr& sp = b.space();
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Rat s = sp->pair(ma.mom, mb.mom);
            // lowest z-power in the expansion is at least s - deg(a) - deg(b)
            Rat lowest = s - Rat(ma.degree() + mb.degree());
            mpz_class f = lowest.ceil();
            long bound = -f.get_si() - 1;
            hi = std::max(hi, bound);
        }
    for (long n = hi; n >= 0; --n)
        if (!nth_product(a, n, b).is_zero()) return n;
    return -1;
}

std::vector<FockState> ope_singular(const FockState& a, const FockState& b, int maxPole) {
    std::vector<FockState> out;
    for (int j = 1; j <= maxPole; ++j) out.push_back(nth_product(a, j - 1, b));
    return out;
}

static Rat eigenvalue(const FockState& image, const FockState& s, const char* what) {
    if (s.is_zero()) throw MathError(std::string(what) + " of the zero state");
    const auto& [m0, c0] = *s.terms().begin();
    auto it = image.terms().find(m0);
    Rat ev = (it == image.terms().end()) ? Rat(0) : it->second / c0;
    if (!(image == ev * s)) throw MathError(std::string(what) + ": state is not homogeneous");
    return ev;
}

Rat conf_weight(const FockState& s, const FockState& L) { return eigenvalue(nth_product(L, 1, s), s, "conformal weight"); }

Rat spectral_flow_weight(const RatVec& x, const FockState& s, const FockState& L) {
    // Delta(x, z) L = sum_d z^{-d} (-1)^d B_d(x) L, with B_d from exp(-sum_j x_j w^j / j).
    const SpacePtr& sp = s.space();
    RatVec xd = sp->dual(x);
    Terms lt(L.terms().begin(), L.terms().end());
    std::map<long, Terms> parts = apply_e_plus(xd, lt);
    FockState total(sp);
    for (const auto& [P, t] : parts) {
        long d = -P;
        FockState ad(sp);
        for (const auto& [m, c] : t) ad.add(m, (d % 2 == 0) ? c : -c);
        // the z^{x_0} factor acts trivially on states of momentum zero
        for (const auto& [m, c] : ad.terms()) {
            (void)c;
            if (std::any_of(m.mom.begin(), m.mom.end(), [](const Rat& r) { return !r.is_zero(); }))
                throw MathError("spectral flow needs a conformal vector of zero momentum");
        }
        total += nth_product(ad, 1 - d, s);
    }
    return eigenvalue(total, s, "twisted conformal weight");
}

Rat momentum_weight(const ModuleSpec& m, const RatVec& lambda) {
    return m.space->pair(lambda, lambda) / Rat(2) - m.space->pair(m.rho, lambda);
}

std::vector<RatVec> module_momenta(const ModuleSpec& m, const Rat& maxConf, const Rat& hLo, const Rat& hHi) {
    const size_t r = m.lattice.size();
    const int R = m.search_radius;
    std::vector<RatVec> out;
    std::vector<long> c(r, -R);
    bool boundary_hit = false;
    if (r == 0) {
        Rat h = m.space->pair(m.hvec, m.offset);
        if (h >= hLo && h <= hHi && momentum_weight(m, m.offset) <= maxConf) out.push_back(m.offset);
        return out;
    }
    while (true) {
        RatVec lam = m.offset;
        for (size_t i = 0; i < r; ++i)
            if (c[i] != 0)
                for (size_t j = 0; j < lam.size(); ++j) lam[j] += Rat(c[i]) * m.lattice[i][j];
        Rat h = m.space->pair(m.hvec, lam);
        if (h >= hLo && h <= hHi && momentum_weight(m, lam) <= maxConf) {
            out.push_back(lam);
            for (long ci : c)
                if (ci == R || ci == -R) boundary_hit = true;
        }
        size_t i = 0;
        while (i < r && c[i] == R) c[i++] = -R;
        if (i == r) break;
        ++c[i];
    }
    if (boundary_hit)
        throw MathError("graded component of " + m.label + " is not finite inside the search box (infinite component)");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ModeList> colored_partitions(int n, int dim) {
    std::vector<ModeList> out;
    ModeList cur;
    // modes are emitted in non-decreasing (gen, depth) order
    auto rec = [&](auto&& self, int remaining, Mode lo) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int g = lo.gen; g < dim; ++g) {
            int dstart = (g == lo.gen) ? lo.depth : 1;
            for (int d = dstart; d <= remaining; ++d) {
                cur.push_back(Mode{g, d});
                self(self, remaining - d, Mode{g, d});
                cur.pop_back();
            }
        }
    };
    rec(rec, n, Mode{0, 1});
    return out;
}

GradedBasis enumerate_graded(const ModuleSpec& m, const Rat& hWeight, const Rat& confWeight) {
    GradedBasis gb{hWeight, confWeight, {}};
    auto moms = module_momenta(m, confWeight, hWeight, hWeight);
    const int dim = static_cast<int>(m.space->dim());
    for (const auto& lam : moms) {
        Rat n = confWeight - momentum_weight(m, lam);
        if (!n.is_integer() || n.sign() < 0) continue;
        for (auto& ml : colored_partitions(static_cast<int>(n.to_long()), dim))
            gb.basis.push_back(FockState::mono(m.space, Rat(1), Mono{lam, ml}));
    }
    return gb;
}

} // namespace voaforge

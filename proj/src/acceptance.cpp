#include "voaforge/acceptance.hpp"

#include "voaforge/c2.hpp"
#include "voaforge/characters.hpp"
#include "voaforge/lattice.hpp"
#include "voaforge/quantum.hpp"
#include "voaforge/realizations.hpp"
#include "voaforge/screening.hpp"
#include "voaforge/weight_window.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>

namespace voaforge {

namespace {

struct Spec {
    const char* title;
    double budget;
    std::function<Report(Profile)> run;
};

std::vector<long> ps(Profile pr, std::vector<long> all) {
    if (pr == Profile::Full) return all;
    std::vector<long> out;
    for (long p : all)
        if (p <= 2) out.push_back(p);
    return out;
}

Rat order_cap(Profile pr, const Rat& order) { return pr == Profile::Quick && order > Rat(3) ? Rat(3) : order; }

std::string tag(const std::string& s, long p) { return s + " p=" + std::to_string(p) + ": "; }

Report wakimoto_closure(Profile pr) {
    Report rep{"Wakimoto closure", {}, json::object()};
    for (long p : ps(pr, {1, 2, 3})) {
        Realization w = build("wakimoto", p);
        Report emb = verify_embedding(w);
        rep.merge(emb, tag("wakimoto", p));
        const bool haveLevel = emb.data.contains("level");
        rep.add(tag("wakimoto", p) + "extracted level", haveLevel && emb.data["level"] == level(p).json(),
                haveLevel ? "k = " + emb.data["level"].get<std::string>() : "no level extracted");
        rep.merge(verify_embedding(build("fms", p)), tag("fms", p));
        for (const auto& [g, s] : w.images) {
            FockState q = apply_q_plus(s, p);
            rep.add(tag("Q+", p) + "annihilates mu(" + g + ")", q.is_zero(), q.is_zero() ? "" : q.str());
        }
    }
    return rep;
}

Report central_charges(Profile pr) {
    Report rep{"central charges", {}, json::object()};
    for (long p : ps(pr, {1, 2, 3})) {
        std::string why;
        auto c = virasoro_central_charge(build("wakimoto", p).at("L"), &why);
        const Rat want(3 - 6 * p);
        rep.add(tag("mu(L_sug)", p) + "c = 3 - 6p", c && *c == want, c ? "c = " + c->str() : why);
        why.clear();
        auto c1 = virasoro_central_charge(omega_1p(p), &why);
        const Rat want1 = Rat(1) - Rat(6 * (p - 1) * (p - 1), p);
        rep.add(tag("omega_1p", p) + "c = 1 - 6(p-1)^2/p", c1 && *c1 == want1, c1 ? "c = " + c1->str() : why);
    }
    return rep;
}

Report inverse_hr(Profile pr) {
    Report rep{"inverse reduction diagram", {}, json::object()};
    for (long p : ps(pr, {2, 3})) rep.merge(verify_diagram(p), tag("diagram", p));
    return rep;
}

Report nilpotency(Profile) {
    Report rep{"nilpotency identities", {}, json::object()};
    for (long p : {1L, 2L}) {
        FockState x1 = strong_generator_n00(1, p);
        FockState sq = nth_product(x1, -1, x1);
        rep.add(tag("x00", p) + "x00_(-1) x00 = 0", sq.is_zero(), sq.str());
        FockState next = nth_product(x1, -2 * p - 1, x1);
        FockState x2 = strong_generator_n00(2, p);
        bool prop = false;
        std::string detail = next.str();
        if (x2.size() == 1 && next.size() == 1 && next.terms().begin()->first == x2.terms().begin()->first) {
            Rat c = next.terms().begin()->second / x2.terms().begin()->second;
            prop = !c.is_zero();
            detail = "scalar " + c.str();
            rep.data["scalar p=" + std::to_string(p)] = c.json();
        }
        rep.add(tag("x_1,00", p) + "x_1,00 (-2p-1) x_1,00 = c x_2,00", prop, detail);
    }
    return rep;
}

void kernel_vs_character(Report& rep, long p, const std::vector<Screening>& S) {
    const Rat maxConf(3);
    const Window win{maxConf + Rat(1), Rat(-6), Rat(6)};
    BiSeries ch = character(CharSpec{CharKind::FtAlgebra, p}, win);
    auto table = kernel_dim_table(S, pi0_module(p), maxConf, -6, 6);
    size_t bad = 0, cells = 0;
    std::string first;
    for (const auto& c : table) {
        ++cells;
        Rat want = char_coeff(ch, c.h_weight, c.conf_weight);
        if (want != Rat(static_cast<long>(c.kernel_dim))) {
            if (!bad++)
                first = "z^" + c.h_weight.str() + " q^" + c.conf_weight.str() + ": kernel " +
                        std::to_string(c.kernel_dim) + ", character " + want.str();
        }
    }
    rep.add("p=" + std::to_string(p) + ": kernel dimensions = FT character coefficients", bad == 0,
            bad ? first : std::to_string(cells) + " cells");
}

Report kernel_character(Profile) {
    Report rep{"kernel = character", {}, json::object()};
    kernel_vs_character(rep, 2, {make_screening("Qminus", 2), make_screening("QFMS", 2)});
    kernel_vs_character(rep, 1, {make_screening("S1", 1), make_screening("S2", 1)});
    return rep;
}

Report character_identities(Profile pr) {
    Report rep{"character identities", {}, json::object()};
    for (long p : ps(pr, {1, 2, 3}))
        for (long n : {0L, 1L, 2L})
            rep.merge(weyl_simple_check(p, n, Window{order_cap(pr, Rat(5)), Rat(-6), Rat(6)}), "(a) ");
    for (auto [r, s] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}})
        rep.merge(decomposition_check(2, r, s, Window{order_cap(pr, Rat(4)), Rat(-6), Rat(6)}), "(b) ");
    rep.merge(p1_decomposition_check(Window{order_cap(pr, Rat(4)), Rat(-8), Rat(8)}), "(c) ");
    return rep;
}

Report m2_structure(Profile) {
    Report rep{"M(2) structure", {}, json::object()};
    rep.merge(verify_embedding(build("m2", 1)), "m2: ");
    return rep;
}

Report c2_checks(Profile pr) {
    Report rep{"C2 algebra", {}, json::object()};
    for (long p : ps(pr, {1, 2})) {
        rep.merge(c2_ideal_equality(p), tag("ideal", p));
        rep.merge(c2_casimir(p), tag("casimir", p));
        rep.merge(c2_nilpotency(p), tag("nilpotency", p));
    }
    return rep;
}

Report quantum_checks(Profile pr) {
    Report rep{"quantum checks", {}, json::object()};
    for (long p : ps(pr, {1, 2, 3})) {
        rep.merge(braiding_check(p), tag("braiding", p));
        rep.merge(expand_super_serre(p), tag("super Serre", p));
    }
    const long p = pr == Profile::Full ? 3 : 2;
    Presentation A = build_presentation(Variant::A, p);
    Presentation S = build_presentation(Variant::S, p);
    AlgebraMap F = map_F(A, S), G = map_G(S, A);
    rep.merge(check_morphism(F, A, S), tag("F", p));
    rep.merge(check_morphism(G, S, A), tag("G", p));
    rep.merge(check_inverse(F, G, A, S), tag("G o F, F o G", p));
    rep.merge(nichols_check(Variant::A, 2), "replacement p=2: ");
    return rep;
}

Report weight_window(Profile pr) {
    Report rep{"weight window", {}, json::object()};
    rep.merge(weight_window_sweep(pr == Profile::Full ? 3 : 2), "sweep: ");
    return rep;
}

const std::vector<Spec>& specs() {
    static const std::vector<Spec> all{
        {"Wakimoto closure", 10, wakimoto_closure},
        {"central charges", 10, central_charges},
        {"inverse reduction diagram", 10, inverse_hr},
        {"nilpotency identities", 5, nilpotency},
        {"kernel = character", 60, kernel_character},
        {"character identities", 30, character_identities},
        {"M(2) structure", 10, m2_structure},
        {"C2 algebra", 30, c2_checks},
        {"quantum checks", 60, quantum_checks},
        {"weight window", 5, weight_window},
    };
    return all;
}

const Spec& spec_at(int id) {
    if (id < 1 || id > criterion_count()) throw MathError("no acceptance criterion " + std::to_string(id));
    return specs()[static_cast<size_t>(id - 1)];
}

std::string seconds_str(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

} // namespace

Profile profile_from_string(const std::string& s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    throw MathError("unknown profile " + s);
}

std::string profile_name(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

int criterion_count() { return static_cast<int>(specs().size()); }
std::string criterion_title(int id) { return spec_at(id).title; }
double criterion_budget(int id) { return spec_at(id).budget; }

CriterionResult run_criterion(int id, Profile profile) {
    const Spec& sp = spec_at(id);
    CriterionResult out;
    out.id = id;
    out.title = sp.title;
    out.budget = sp.budget;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        out.report = sp.run(profile);
    } catch (const std::exception& e) {
        out.report = Report{sp.title, {}, json::object()};
        out.report.add("run", false, std::string("error: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.report.add("runtime < " + seconds_str(sp.budget) + " s", out.seconds < sp.budget,
                   seconds_str(out.seconds) + " s");
    return out;
}

Verdict SuiteResult::verdict() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : criteria) {
        if (c.verdict() == Verdict::Fail) return Verdict::Fail;
        if (c.verdict() == Verdict::Inconclusive) v = Verdict::Inconclusive;
    }
    return v;
}

json SuiteResult::to_json() const {
    json crit = json::array();
    for (const auto& c : criteria) {
        json j = c.report.to_json();
        crit.push_back({{"id", c.id},
                        {"title", c.title},
                        {"verdict", verdict_str(c.verdict())},
                        {"seconds", seconds_str(c.seconds)},
                        {"budget", seconds_str(c.budget)},
                        {"report", j}});
    }
    return {{"profile", profile_name(profile)},
            {"verdict", verdict_str(verdict())},
            {"seconds", seconds_str(seconds)},
            {"criteria", crit}};
}

SuiteResult run_suite(const SuiteOptions& opts) {
    SuiteResult out;
    out.profile = opts.profile;
    const bool before = cocycle_fault();
    set_cocycle_fault(opts.inject_cocycle_fault);
    const auto t0 = std::chrono::steady_clock::now();
    for (int id = 1; id <= criterion_count(); ++id) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
        out.criteria.push_back(run_criterion(id, opts.profile));
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    set_cocycle_fault(before);
    return out;
}

int exit_code(Verdict v) {
    switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 3;
    }
    return 1;
}

} // namespace voaforge

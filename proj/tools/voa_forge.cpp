#include "voaforge/acceptance.hpp"
#include "voaforge/c2.hpp"
#include "voaforge/characters.hpp"
#include "voaforge/lattice.hpp"
#include "voaforge/parser.hpp"
#include "voaforge/quantum.hpp"
#include "voaforge/realizations.hpp"
#include "voaforge/screening.hpp"
#include "voaforge/weight_window.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace voaforge;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    bool json_mode = false;

    void emit(const json& j, const std::string& text) const {
        if (json_mode) std::cout << j.dump(2) << "\n";
        else std::cout << text;
    }
};

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << r.name << ": " << verdict_str(r.verdict()) << "\n";
    for (const auto& e : r.entries) {
        os << "  [" << verdict_str(e.verdict) << "] " << e.item;
        if (!e.detail.empty()) os << " -- " << e.detail;
        os << "\n";
    }
    for (const auto& [k, v] : r.data.items()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return os.str();
}

int finish(const Report& r, const Output& out) {
    out.emit(r.to_json(), report_text(r));
    return exit_code(r.verdict());
}

std::pair<long, long> parse_window(const std::string& w) {
    auto colon = w.find(':');
    if (colon == std::string::npos) throw Usage("window must look like lo:hi, got " + w);
    try {
        long lo = std::stol(w.substr(0, colon)), hi = std::stol(w.substr(colon + 1));
        if (lo > hi) throw Usage("empty window " + w);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Usage("window must look like lo:hi, got " + w);
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

SpacePtr space_by_name(const std::string& name, long p) {
    if (name == "pi0") return spaces::pi0_lattice(p);
    if (name == "heisenberg") return spaces::heisenberg_alpha();
    if (name == "singlet") return spaces::singlet_u();
    if (name == "super") return spaces::super_xaa();
    if (name == "super-rescaled") return spaces::super_rescaled(p);
    throw Usage("unknown space " + name + " (pi0, heisenberg, singlet, super, super-rescaled)");
}

json states_json(const std::vector<std::pair<std::string, FockState>>& states) {
    json j = json::object();
    for (const auto& [k, s] : states) j[k] = state_json(s);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"voa-forge: exact free field and quantum group computations"};
    app.require_subcommand(1);
    std::string outFmt = "text";
    app.add_option("--out", outFmt, "output format")->check(CLI::IsMember({"text", "json"}));

    long p = 2;
    auto addP = [&](CLI::App* sc) { sc->add_option("--p", p, "the parameter p")->check(CLI::Range(1L, 12L)); };

    // realization
    auto* real = app.add_subcommand("realization", "print or verify a named free field realization");
    std::string realName = "wakimoto";
    bool verify = false;
    real->add_option("--name", realName)->check(CLI::IsMember(realization_names()));
    real->add_flag("--verify", verify, "check the OPE table of the source algebra");
    addP(real);

    // ope
    auto* ope = app.add_subcommand("ope", "singular part of a(z) b(w)");
    std::string opeA, opeB, opeSpace = "pi0", opeReal;
    ope->add_option("a", opeA, "left state or realization generator")->required();
    ope->add_option("b", opeB, "right state or realization generator")->required();
    ope->add_option("--space", opeSpace, "pi0 | heisenberg | singlet | super | super-rescaled");
    ope->add_option("--realization", opeReal, "read a and b as generators of this realization");
    addP(ope);

    // screen
    auto* scr = app.add_subcommand("screen", "apply screening operators to a state");
    std::string scrNames = "Qplus", scrExpr;
    scr->add_option("--screenings", scrNames, "comma separated screening names");
    scr->add_option("state", scrExpr, "state or realization generator label")->required();
    addP(scr);

    // kernel
    auto* ker = app.add_subcommand("kernel", "bigraded dimensions of a joint screening kernel");
    std::string kerModule, kerScreens = "Qminus,QFMS", kerWindow = "-4:4";
    std::string kerMaxConf = "3";
    bool kerSerial = false;
    ker->add_option("--module", kerModule, "module label, default Pi0 x V(sqrtp A1)");
    ker->add_option("--screenings", kerScreens, "comma separated screening names");
    ker->add_option("--max-conf", kerMaxConf, "largest conformal weight");
    ker->add_option("--window", kerWindow, "h-weight window lo:hi");
    ker->add_flag("--serial", kerSerial, "use the single-threaded reference kernel");
    addP(ker);

    // omega
    auto* om = app.add_subcommand("omega", "weight window model of the Omega modules");
    long omR = 1, omS = 1;
    std::string omB = "0", omWindow = "-3:3";
    bool classify = false;
    om->add_option("--r", omR);
    om->add_option("--s", omS);
    om->add_option("--b", omB, "rational parameter b");
    om->add_option("--window", omWindow, "offset window lo:hi");
    om->add_flag("--classify", classify, "report split points and the case label");
    addP(om);

    // char
    auto* ch = app.add_subcommand("char", "truncated character");
    std::string chKind = "simple", chOrder = "5", chWindow = "-6:6", chLambda = "0", chDelta = "0";
    long chR = 1, chS = 1, chN = 0;
    ch->add_option("--kind", chKind, "fock | betagamma | lattice-module | simple | weyl | singlet | ft | pi-h");
    ch->add_option("--r", chR);
    ch->add_option("--s", chS);
    ch->add_option("--n", chN);
    ch->add_option("--lambda", chLambda);
    ch->add_option("--delta", chDelta);
    ch->add_option("--order", chOrder, "q-truncation order");
    ch->add_option("--window", chWindow, "z window lo:hi");
    addP(ch);

    // check
    auto* chk = app.add_subcommand("check", "character identities");
    std::string identity = "weyl-simple", ckOrder = "4", ckWindow = "-6:6";
    long ckR = 1, ckS = 1, ckN = 0;
    bool perturb = false;
    chk->add_option("--identity", identity)
        ->check(CLI::IsMember({"weyl-simple", "x-decomposition", "p1-decomposition", "ct-pipeline"}));
    chk->add_option("--r", ckR);
    chk->add_option("--s", ckS);
    chk->add_option("--n", ckN);
    chk->add_option("--order", ckOrder);
    chk->add_option("--window", ckWindow);
    chk->add_flag("--perturb", perturb, "perturb ch M_1 (negative test of p1-decomposition)");
    addP(chk);

    // c2
    auto* c2 = app.add_subcommand("c2", "C2 algebra and associated variety checks");
    std::string c2Check = "ideal-equality";
    c2->add_option("--check", c2Check)->check(CLI::IsMember({"ideal-equality", "casimir", "nilpotency"}));
    addP(c2);

    // qgroup
    auto* qg = app.add_subcommand("qgroup", "quantum group presentations");
    std::string variant = "a", qgCheck = "relations";
    long maxSteps = default_max_steps();
    qg->add_option("--variant", variant)->check(CLI::IsMember({"a", "s", "uqh"}));
    qg->add_option("--check", qgCheck)
        ->check(CLI::IsMember({"relations", "fg-inverse", "super-serre", "braiding", "coproduct", "uqh-map"}));
    qg->add_option("--max-steps", maxSteps, "rewrite step budget")->check(CLI::PositiveNumber);
    addP(qg);

    // suite
    auto* suite = app.add_subcommand("suite", "run the acceptance suite");
    std::string profile = "full";
    bool fault = false;
    std::vector<int> only;
    suite->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
    suite->add_flag("--inject-cocycle-fault", fault, "flip the lattice cocycle sign");
    suite->add_option("--only", only, "criterion ids")->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Output out{outFmt == "json"};
    try {
        if (*real) {
            Realization r = build(realName, p);
            if (verify) return finish(verify_embedding(r), out);
            std::ostringstream os;
            os << r.name << " (" << r.source << ", p=" << r.p << ") in " << r.target->label() << "\n";
            for (const auto& [g, s] : r.images) os << "  " << g << " = " << print_state(s) << "\n";
            out.emit({{"name", r.name}, {"source", r.source}, {"p", r.p}, {"images", states_json(r.images)}}, os.str());
            return 0;
        }
        if (*ope) {
            FockState a, b;
            if (!opeReal.empty()) {
                Realization r = build(opeReal, p);
                if (!r.has(opeA) || !r.has(opeB)) throw Usage("unknown generator of " + opeReal);
                a = r.at(opeA);
                b = r.at(opeB);
            } else {
                SpacePtr sp = space_by_name(opeSpace, p);
                a = parse_expr(opeA, sp);
                b = parse_expr(opeB, sp);
            }
            const long top = max_pole(a, b);
            std::vector<FockState> poles = top >= 0 ? ope_singular(a, b, static_cast<int>(top + 1)) : std::vector<FockState>{};
            std::ostringstream os;
            json j = json::array();
            for (long n = top; n >= 0; --n) {
                const FockState& s = poles[static_cast<size_t>(n)];
                if (s.is_zero()) continue;
                os << "(z-w)^-" << n + 1 << ": " << print_state(s) << "\n";
                j.push_back({{"pole", n + 1}, {"state", state_json(s)}});
            }
            if (j.empty()) os << "regular\n";
            out.emit({{"a", print_state(a)}, {"b", print_state(b)}, {"poles", j}}, os.str());
            return 0;
        }
        if (*scr) {
            std::vector<Screening> ss;
            for (const auto& n : split_list(scrNames)) ss.push_back(make_screening(n, p));
            if (ss.empty()) throw Usage("no screenings given");
            FockState s;
            Realization w = build("wakimoto", p);
            if (w.has(scrExpr)) s = w.at(scrExpr);
            else s = parse_expr(scrExpr, ss.front().space, true);
            std::ostringstream os;
            json j = json::object();
            for (const auto& S : ss) {
                FockState r = screen_apply(S, s);
                os << S.name << "(" << print_state(s) << ") = " << print_state(r) << "\n";
                j[S.name] = state_json(r);
            }
            out.emit(j, os.str());
            return 0;
        }
        if (*ker) {
            std::vector<Screening> ss;
            for (const auto& n : split_list(kerScreens)) ss.push_back(make_screening(n, p));
            ModuleSpec m = pi0_module(p);
            if (!kerModule.empty() && kerModule != m.label) throw Usage("unknown module " + kerModule + "; available: " + m.label);
            auto [lo, hi] = parse_window(kerWindow);
            const Rat maxConf = Rat::parse(kerMaxConf);
            auto table = kerSerial ? kernel_dim_table_serial(ss, m, maxConf, lo, hi) : kernel_dim_table(ss, m, maxConf, lo, hi);
            std::ostringstream os;
            os << "conf  h  kernel/component\n";
            json cells = json::array();
            for (const auto& c : table) {
                os << c.conf_weight.str() << "  " << c.h_weight.str() << "  " << c.kernel_dim << "/" << c.component_dim << "\n";
                cells.push_back({{"conf", c.conf_weight.json()}, {"h", c.h_weight.json()},
                                 {"kernel", c.kernel_dim}, {"component", c.component_dim}});
            }
            out.emit({{"module", m.label}, {"screenings", split_list(kerScreens)}, {"cells", cells}}, os.str());
            return 0;
        }
        if (*om) {
            auto [lo, hi] = parse_window(omWindow);
            OmegaWindow w{p, omR, omS, Rat::parse(omB), lo, hi};
            Report rep = bracket_check(w);
            if (classify) {
                SplitInfo si = split_points(w);
                json sp = json::array(), roots = json::array();
                for (const auto& x : si.split_points) sp.push_back(x.json());
                for (const auto& x : si.roots_in_class) roots.push_back(x.json());
                rep.data["case"] = si.case_label;
                rep.data["structure"] = si.structure;
                rep.data["split_points"] = sp;
                rep.data["roots_in_class"] = roots;
            }
            return finish(rep, out);
        }
        if (*ch) {
            CharSpec spec;
            spec.kind = chKind == "simple" ? CharKind::SimpleAffine : char_kind_from_string(chKind);
            spec.p = p;
            spec.r = chR;
            spec.s = chS;
            spec.n = chN;
            spec.lambda = Rat::parse(chLambda);
            spec.delta = Rat::parse(chDelta);
            auto [lo, hi] = parse_window(chWindow);
            BiSeries s = character(spec, Window{Rat::parse(chOrder), Rat(lo), Rat(hi)});
            out.emit(series_json(s), s.str() + "\n");
            return 0;
        }
        if (*chk) {
            auto [lo, hi] = parse_window(ckWindow);
            Window win{Rat::parse(ckOrder), Rat(lo), Rat(hi)};
            if (identity == "weyl-simple") return finish(weyl_simple_check(p, ckN, win), out);
            if (identity == "x-decomposition") return finish(decomposition_check(p, ckR, ckS, win), out);
            if (identity == "p1-decomposition") return finish(p1_decomposition_check(win, perturb), out);
            return finish(ct_pipeline_check(p, ckR, ckN, ckS, win), out);
        }
        if (*c2) {
            if (c2Check == "ideal-equality") return finish(c2_ideal_equality(p), out);
            if (c2Check == "casimir") return finish(c2_casimir(p), out);
            return finish(c2_nilpotency(p), out);
        }
        if (*qg) {
            const Variant v = variant_from_string(variant);
            if (qgCheck == "super-serre") return finish(expand_super_serre(p), out);
            if (qgCheck == "braiding") return finish(braiding_check(p), out);
            if (qgCheck == "coproduct") return finish(coproduct_twist_check(p, maxSteps), out);
            if (qgCheck == "relations") {
                Presentation P = build_presentation(v, p);
                Report rep = nichols_check(v, p);
                rep.merge(confluence_check(P, 200, 6, 1, maxSteps), "confluence: ");
                return finish(rep, out);
            }
            if (qgCheck == "uqh-map") {
                Presentation U = build_presentation(Variant::UQH, p), A = build_presentation(Variant::A, p);
                return finish(check_morphism(map_uqh(U, A), U, A, maxSteps), out);
            }
            Presentation A = build_presentation(Variant::A, p), S = build_presentation(Variant::S, p);
            AlgebraMap F = map_F(A, S), G = map_G(S, A);
            Report rep{"F and G (p=" + std::to_string(p) + ")", {}, json::object()};
            rep.merge(check_morphism(F, A, S, maxSteps), "F: ");
            rep.merge(check_morphism(G, S, A, maxSteps), "G: ");
            rep.merge(check_inverse(F, G, A, S, maxSteps), "inverse: ");
            return finish(rep, out);
        }
        if (*suite) {
            SuiteOptions opts;
            opts.profile = profile_from_string(profile);
            opts.inject_cocycle_fault = fault;
            opts.only = only;
            SuiteResult res = run_suite(opts);
            std::ostringstream os;
            for (const auto& c : res.criteria) {
                os << "[" << verdict_str(c.verdict()) << "] " << c.id << ". " << c.title << " (" << c.seconds << " s)";
                if (c.verdict() != Verdict::Pass) os << ": " << c.report.first_problem();
                os << "\n";
            }
            os << "suite " << profile_name(res.profile) << ": " << verdict_str(res.verdict()) << "\n";
            out.emit(res.to_json(), os.str());
            return exit_code(res.verdict());
        }
    } catch (const Usage& e) {
        std::cerr << "voa-forge: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "voa-forge: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "voa-forge: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

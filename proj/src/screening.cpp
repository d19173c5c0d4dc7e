#include "voaforge/screening.hpp"
#include "voaforge/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace voaforge {

namespace {

Screening on_pi0(std::string name, long p, RatVec charge) {
    auto sp = spaces::pi0_lattice(p);
    return Screening{std::move(name), sp, std::move(charge), FockState::vacuum(sp)};
}

Screening on_super(std::string name, long p, RatVec charge) {
    auto sp = spaces::super_rescaled(p);
    return Screening{std::move(name), sp, std::move(charge), FockState::vacuum(sp)};
}

} // namespace

Screening make_screening(const std::string& name, long p) {
    if (p < 1) throw MathError("p must be positive");
    const Rat ip(1, p);
    if (name == "Qplus") return on_pi0(name, p, {Rat(1), Rat(1), Rat(1)});
    if (name == "Qminus") return on_pi0(name, p, {-ip, -ip, -ip});
    if (name == "QFMS") return on_pi0(name, p, {Rat(1), Rat(0), Rat(0)});
    if (name == "Qplus_short") return on_pi0(name, p, {Rat(0), Rat(0), Rat(1)});
    if (name == "Qminus_short") return on_pi0(name, p, {Rat(0), Rat(0), -ip});
    if (name == "S1" || name == "S2") {
        if (p != 1) throw MathError(name + " is defined for p = 1 only (use Qminus and QFMS for p >= 2)");
        if (name == "S1") return on_pi0(name, p, {Rat(1), Rat(0), Rat(0)});
        return on_pi0(name, p, {Rat(0), Rat(-1), Rat(-1)});
    }
    if (name == "S1hat") {
        if (p == 1) return on_super(name, p, {Rat(1), Rat(-1, 2), Rat(-1, 2)});
        return on_super(name, p, {Rat(0), Rat(-1), Rat(0)});
    }
    if (name == "S2hat") return on_super(name, p, {Rat(1), Rat(1, 2), Rat(-1, 2)});
    throw MathError("unknown screening " + name);
}

std::vector<std::string> screening_names() {
    return {"Qplus", "Qminus", "QFMS", "Qplus_short", "Qminus_short", "S1", "S2", "S1hat", "S2hat"};
}

FockState screen_apply(const Screening& S, const FockState& s) {
    for (const auto& [m, c] : s.terms()) {
        Rat pr = S.space->pair(S.charge, m.mom);
        if (!pr.is_integer())
            throw MathError("non-integral pairing " + pr.str() + " of " + S.name + " with momentum " +
                            S.space->vec_str(m.mom));
    }
    FockState field(S.space);
    for (const auto& [m, c] : S.dressing.terms()) {
        RatVec mom = m.mom;
        for (size_t i = 0; i < mom.size(); ++i) mom[i] += S.charge[i];
        field.add(Mono{mom, m.modes}, c);
    }
    return nth_product(field, 0, s);
}

ModuleSpec pi0_module(long p) {
    ModuleSpec m;
    m.space = spaces::pi0_lattice(p);
    m.offset = {Rat(0), Rat(0), Rat(0)};
    m.lattice = {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    m.hvec = {Rat(0), Rat(-2), Rat(-1, p)};
    m.rho = {Rat(-1, 2), Rat(1, 2), Rat(1, 2)};
    m.label = "Pi0 x V(sqrt" + std::to_string(p) + " A1)";
    return m;
}

namespace {

// Rows: one per (screening, output monomial); columns: component basis.
QMat screening_matrix(const std::vector<Screening>& screenings, const std::vector<FockState>& basis) {
    QMat rows;
    for (const auto& S : screenings) {
        std::map<Mono, size_t> index;
        std::vector<FockState> images;
        images.reserve(basis.size());
        for (const auto& b : basis) {
            images.push_back(screen_apply(S, b));
            for (const auto& [m, c] : images.back().terms()) index.emplace(m, index.size());
        }
        const size_t base = rows.size();
        rows.resize(base + index.size(), std::vector<Rat>(basis.size(), Rat(0)));
        for (size_t j = 0; j < images.size(); ++j)
            for (const auto& [m, c] : images[j].terms()) rows[base + index.at(m)][j] = c;
    }
    return rows;
}

std::vector<std::vector<FockState>> momentum_blocks(const std::vector<FockState>& basis) {
    std::map<RatVec, std::vector<FockState>> blocks;
    for (const auto& b : basis) blocks[b.terms().begin()->first.mom].push_back(b);
    std::vector<std::vector<FockState>> out;
    for (auto& [mom, v] : blocks) out.push_back(std::move(v));
    return out;
}

KernelCell compute_cell(const std::vector<Screening>& screenings, const ModuleSpec& m, const Rat& h, const Rat& d) {
    GradedBasis gb = enumerate_graded(m, h, d);
    KernelCell cell{h, d, gb.basis.size(), 0};
    for (const auto& block : momentum_blocks(gb.basis)) {
        QMat rows = screening_matrix(screenings, block);
        size_t r = rows.empty() ? 0 : bareiss_rank(to_integer_rows(rows));
        cell.kernel_dim += block.size() - r;
    }
    return cell;
}

std::vector<std::pair<Rat, Rat>> table_cells(const ModuleSpec& m, const Rat& maxConf, long hLo, long hHi) {
    std::set<std::pair<Rat, Rat>> cells;
    if (hLo > hHi) return {};
    for (const auto& lam : module_momenta(m, maxConf, Rat(hLo), Rat(hHi))) {
        Rat h = m.space->pair(m.hvec, lam);
        if (!h.is_integer()) continue;
        for (Rat d = momentum_weight(m, lam); d <= maxConf; d += Rat(1)) cells.insert({d, h});
    }
    std::vector<std::pair<Rat, Rat>> out(cells.begin(), cells.end());
    return out;
}

} // namespace

GradedBasis kernel_basis(const std::vector<Screening>& screenings, const ModuleSpec& m, const Rat& hWeight,
                         const Rat& confWeight) {
    GradedBasis gb = enumerate_graded(m, hWeight, confWeight);
    GradedBasis out{hWeight, confWeight, {}};
    for (const auto& block : momentum_blocks(gb.basis)) {
        QMat rows = screening_matrix(screenings, block);
        if (rows.empty()) {
            out.basis.insert(out.basis.end(), block.begin(), block.end());
            continue;
        }
        for (const auto& v : nullspace(rows, block.size())) {
            FockState s(m.space);
            for (size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) s += v[j] * block[j];
            out.basis.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<KernelCell> kernel_dim_table_serial(const std::vector<Screening>& screenings, const ModuleSpec& m,
                                                const Rat& maxConf, long hLo, long hHi) {
    std::vector<KernelCell> out;
    for (const auto& [d, h] : table_cells(m, maxConf, hLo, hHi)) out.push_back(compute_cell(screenings, m, h, d));
    return out;
}

std::vector<KernelCell> kernel_dim_table(const std::vector<Screening>& screenings, const ModuleSpec& m,
                                         const Rat& maxConf, long hLo, long hHi) {
    auto cells = table_cells(m, maxConf, hLo, hHi);
    std::vector<KernelCell> out(cells.size());
    std::string error;
    const long n = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = compute_cell(screenings, m, cells[i].second, cells[i].first);
        } catch (const std::exception& e) {
#pragma omp critical
            if (error.empty()) error = e.what();
        }
    }
    if (!error.empty()) throw MathError(error);
    return out;
}

} // namespace voaforge

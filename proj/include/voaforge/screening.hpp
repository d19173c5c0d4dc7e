#pragma once

#include "voaforge/fock.hpp"

#include <string>
#include <vector>

namespace voaforge {

/** Single-integral screening operator: the zero mode of Y(dressing e^charge, z). */
struct Screening {
    std::string name;
    SpacePtr space;
    RatVec charge;
    FockState dressing; // vacuum unless stated
};

/**
 * Built-in screenings. On spaces::pi0_lattice(p): Qplus = e^{u+v+A}, Qminus = e^{-(u+v)/p - A/p},
 * QFMS = e^u, Qplus_short = e^A, Qminus_short = e^{-A/p}; for p = 1 also S1 = e^u, S2 = e^{-v-A}.
 * On spaces::super_rescaled(p): S1hat = e^{-a} (p >= 2) or e^{x - (a+ad)/2} (p = 1), S2hat = e^{x + (a-ad)/2}.
 */
Screening make_screening(const std::string& name, long p);
std::vector<std::string> screening_names();

FockState screen_apply(const Screening& S, const FockState& s);

/** Pi0 x V(sqrt p A1) graded by the affine h_0 and the Wakimoto conformal vector. */
ModuleSpec pi0_module(long p);

/** Exact basis of the joint kernel on one bigraded component. */
GradedBasis kernel_basis(const std::vector<Screening>& screenings, const ModuleSpec& m, const Rat& hWeight,
                         const Rat& confWeight);

/** Joint kernel dimension of one component, via fraction-free rank. */
struct KernelCell {
    Rat h_weight;
    Rat conf_weight;
    size_t component_dim = 0;
    size_t kernel_dim = 0;
};

/** Cells with hLo <= h <= hHi and conformal weight <= maxConf, sorted by (conf, h). */
std::vector<KernelCell> kernel_dim_table(const std::vector<Screening>& screenings, const ModuleSpec& m,
                                         const Rat& maxConf, long hLo, long hHi);
/** Same table computed cell by cell on one thread. */
std::vector<KernelCell> kernel_dim_table_serial(const std::vector<Screening>& screenings, const ModuleSpec& m,
                                                const Rat& maxConf, long hLo, long hHi);

} // namespace voaforge

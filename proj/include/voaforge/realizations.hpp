#pragma once

#include "voaforge/fock.hpp"
#include "voaforge/report.hpp"

#include <string>
#include <utility>
#include <vector>

namespace voaforge {

/**
 * Named free field map: generator label -> image state.
 *
 * Unless stated otherwise images live in spaces::pi0_lattice(p) with basis
 * {u, v, A}, A = sqrt(p) alpha; beta = e^{u+v}, gamma = -u_{-1} e^{-(u+v)}.
 */
struct Realization {
    std::string name;
    std::string source; // affine-sl2 | virasoro | betagamma | M2 | generators
    long p = 1;
    SpacePtr target;
    std::vector<std::pair<std::string, FockState>> images;

    const FockState& at(const std::string& gen) const;
    bool has(const std::string& gen) const;
};

/** k = -2 + 1/p. */
Rat level(long p);

FockState fms_beta(long p);
FockState fms_gamma(long p);

/**
 * Labels: "wakimoto" (e, h, f, L), "fms" (beta, gamma), "phi" (e, h, f, L with the
 * inner Virasoro realized by omega), "omega" (L), "m2" (L, W on spaces::singlet_u()),
 * "strong" (x00 .. x22), "p1" (L1, L2, W1, W2, A, A', B, sug, x11; p = 1 only).
 */
Realization build(const std::string& name, long p);
std::vector<std::string> realization_names();

/** omega_{1,p} = A^2/(4p) + (p-1)/(2p) A_{-2}. */
FockState omega_1p(long p);

/** The automorphism g acting on vectors of pi0_lattice(p). */
RatVec g_vector(const RatVec& x, long p, bool inverse = false);
/** g on states with momenta in Z(u+v) + ZA. */
FockState apply_g(const FockState& s, long p, bool inverse = false);

/** x_{ij} = f_0^i Q_+^j e^{-A}. */
FockState strong_generator(int i, int j, long p);
/** x_{n,00} = e^{-nA}. */
FockState strong_generator_n00(long n, long p);
FockState screening_charge_plus(long p);
/** Q_+ = (e^{u+v+A})_(0). */
FockState apply_q_plus(const FockState& s, long p);
/** f_0 = mu(f)_(0). */
FockState apply_f0(const FockState& s, long p);

/** Checks the OPE table of the source algebra exactly. For affine sl2 the level is read from e.f. */
Report verify_embedding(const Realization& r);
/** g(mu(X)) == Phi(X) for X in e, h, f, L plus the screening charge maps. */
Report verify_diagram(long p);

/** Exact Virasoro test; returns the central charge if L.L has Virasoro shape. */
std::optional<Rat> virasoro_central_charge(const FockState& L, std::string* why = nullptr);

} // namespace voaforge

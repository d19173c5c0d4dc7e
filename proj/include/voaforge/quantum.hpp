#pragma once

#include "voaforge/ncalg.hpp"
#include "voaforge/report.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace voaforge {

/** a and s: the two braided Drinfeld doubles; uqh: the unrolled restricted quantum supergroup. */
enum class Variant { A, S, UQH };

Variant variant_from_string(const std::string& s);
std::string variant_name(Variant v);

/**
 * Presentation over Q(q), q = exp(pi i / p). Letters are ordered so that normal
 * words read (x-block)(x*-block)(H-block)(K-block); for uqh the blocks are E, F, H, K.
 */
struct Presentation {
    Variant variant = Variant::A;
    long p = 1;
    int order = 2;
    std::vector<std::string> alphabet;
    std::array<std::array<long, 2>, 2> cartan{};
    std::array<int, 2> parity{};
    /** B_ij = (-1)^{p(i)p(j)} q^{c_ij}. */
    std::array<std::array<Cyclo, 2>, 2> braiding;
    /** Defining relations, each meaning expr = 0. */
    std::vector<std::pair<std::string, NCExpr>> relations;
    RewriteSystem rules;
    /** Coproduct, counit and antipode on generators, as text. */
    std::vector<std::pair<std::string, std::string>> hopf;

    int letter(const std::string& name) const;
    NCExpr gen(const std::string& name) const;
    NCExpr one() const { return NCExpr::scalar(order, Rat(1)); }
    Cyclo q(long k = 1) const { return Cyclo::zeta_pow(order, k); }
    Cyclo scalar(const Rat& r) const { return Cyclo(order, r); }
    /** Nichols relations on the positive letters (x or E). */
    std::vector<NCExpr> nichols_relations() const;
    Reduction reduce(const NCExpr& e, long maxSteps = default_max_steps(),
                     Strategy s = Strategy::Leftmost) const {
        return rules.reduce(e, maxSteps, s);
    }
    /** Parse a product like "x1* x2 K2^-1" into a word expression. */
    NCExpr word(const std::string& text) const;
};

/** Errors: variant a or uqh with p = 1. */
Presentation build_presentation(Variant v, long p);

/** Algebra map given on every letter of the source alphabet. */
struct AlgebraMap {
    std::string name;
    std::map<std::string, NCExpr> images;
};

NCExpr apply_map(const AlgebraMap& f, const Presentation& source, const NCExpr& e);

/** F: U^a -> U^s and G: U^s -> U^a. */
AlgebraMap map_F(const Presentation& a, const Presentation& s);
AlgebraMap map_G(const Presentation& s, const Presentation& a);
/** The automorphism omega of U^a. */
AlgebraMap map_omega(const Presentation& a);
/** u_q^H(sl(2|1)) -> U^a: H, K fixed, E_i -> (-1)^{d_i2} omega(F^_i K_i), F_i -> omega(K_i^-1 E^_i). */
AlgebraMap map_uqh(const Presentation& uqh, const Presentation& a);

/** Every defining relation of the source maps to zero in the target. */
Report check_morphism(const AlgebraMap& f, const Presentation& source, const Presentation& target,
                      long maxSteps = default_max_steps());
/** G(F(g)) = g on the source letters and F(G(g)) = g on the target letters. */
Report check_inverse(const AlgebraMap& F, const AlgebraMap& G, const Presentation& source,
                     const Presentation& target, long maxSteps = default_max_steps());

/** (e1 e2 + q^-1 e2 e1)^p = (e1 e2)^p - (e2 e1)^p modulo e1^2 = e2^2 = 0. */
Report expand_super_serre(long p);
/** Braiding matrix against the Cartan matrix, parities and the lattice pairings of the screening weights. */
Report braiding_check(long p);
/** Nichols relations: rule set, PBW dimension 4p on both halves, and the p = 2 replacement for variant a. */
Report nichols_check(Variant v, long p);
/** Random words of length <= maxLen reduced by leftmost and rightmost rewriting agree; gradings are preserved. */
Report confluence_check(const Presentation& P, int samples, size_t maxLen, unsigned seed,
                        long maxSteps = default_max_steps());
/** Delta^s(F(v)) Phi = Phi (F x F)(Delta^a(v)) on generators, Phi = 1x1 - K0 K2^-1 x2* x x2. */
Report coproduct_twist_check(long p, long maxSteps = default_max_steps());

} // namespace voaforge

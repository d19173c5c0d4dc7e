#pragma once

#include "voaforge/lattice.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace voaforge {

/** Creation mode gen_{-depth}, depth >= 1. */
struct Mode {
    int gen;
    int depth;
    friend auto operator<=>(const Mode&, const Mode&) = default;
    friend bool operator==(const Mode&, const Mode&) = default;
};

using ModeList = std::vector<Mode>; // sorted

/** A creation monomial applied to the momentum vacuum e^mom. */
struct Mono {
    RatVec mom;
    ModeList modes;
    friend bool operator<(const Mono& a, const Mono& b) {
        if (a.mom != b.mom) return std::lexicographical_compare(a.mom.begin(), a.mom.end(), b.mom.begin(), b.mom.end());
        return a.modes < b.modes;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.mom == b.mom && a.modes == b.modes; }
    int degree() const;
};

/** Finite rational combination of Fock monomials in one quadratic space. */
class FockState {
  public:
    FockState() = default;
    explicit FockState(SpacePtr s) : space_(std::move(s)) {}
    static FockState vacuum(SpacePtr s);
    static FockState exp(SpacePtr s, const RatVec& mom);
    static FockState mono(SpacePtr s, const Rat& c, Mono m);

    const SpacePtr& space() const { return space_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Mono& m, const Rat& c);
    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState& operator*=(const Rat& c);
    friend FockState operator+(FockState a, const FockState& b) { return a += b; }
    friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
    friend FockState operator*(const Rat& c, FockState a) { return a *= c; }
    FockState operator-() const { return Rat(-1) * *this; }
    friend bool operator==(const FockState& a, const FockState& b) { return a.terms_ == b.terms_; }

    /** Apply creation mode gen_{-depth} on the left of every term. */
    FockState create(int gen, int depth) const;
    /** Apply a creation mode of a general vector. */
    FockState create(const RatVec& x, int depth) const;

    /** Canonical text, e.g. "2 u[-1] u[-1] A[-2] e^{u+v}". */
    std::string str() const;

  private:
    void check_space(const FockState& o) const;
    SpacePtr space_;
    std::map<Mono, Rat> terms_;
};

/** Heisenberg mode gen_n acting on s; [a_m, b_n] = m (a,b) delta_{m+n,0}. */
FockState mode_act(int gen, int n, const FockState& s);
FockState mode_act(const RatVec& x, int n, const FockState& s);

/** Translation operator T. */
FockState translate(const FockState& s);
/** T^j / j!. */
FockState translate_div(const FockState& s, int j);

/** Coefficient of z^k in Y(a, z) b. Throws when k differs from an exponent of the expansion by a non-integer. */
FockState field_coeff(const FockState& a, const Rat& k, const FockState& b);
/** Coefficient of z^k in Y(e^x, z) s. */
FockState lattice_coeff(const RatVec& x, const Rat& k, const FockState& s);
/** a_(n) b, the coefficient of z^{-n-1}. */
FockState nth_product(const FockState& a, long n, const FockState& b);
/** Poles 1..maxPole of a(z) b(w): entry j-1 holds a_(j-1) b. */
std::vector<FockState> ope_singular(const FockState& a, const FockState& b, int maxPole);
/** Highest n with a_(n) b != 0 (or -1 when every non-negative product vanishes). */
long max_pole(const FockState& a, const FockState& b);

/** L_0 eigenvalue of s with L_0 = L_(1); throws if s is not an eigenvector. */
Rat conf_weight(const FockState& s, const FockState& L);

/**
 * Conformal weight of s inside the spectral flow twist by x, i.e. the eigenvalue of
 * L_0 + x_0 + (x, x)/2 after the twist (Li's Delta(x, z) operator).
 */
Rat spectral_flow_weight(const RatVec& x, const FockState& s, const FockState& L);

/** Lattice coset with a conformal grading d(lambda) = (lambda,lambda)/2 - (rho,lambda) and h-weight (h, lambda). */
struct ModuleSpec {
    SpacePtr space;
    RatVec offset;
    RatMat lattice;
    RatVec hvec;
    RatVec rho;
    int search_radius = 12;
    std::string label;
};

struct GradedBasis {
    Rat h_weight;
    Rat conf_weight;
    std::vector<FockState> basis;
};

/** Momentum weight (lambda,lambda)/2 - (rho,lambda). */
Rat momentum_weight(const ModuleSpec& m, const RatVec& lambda);
/** Monomial basis of the component with the given h-weight and conformal weight. */
GradedBasis enumerate_graded(const ModuleSpec& m, const Rat& hWeight, const Rat& confWeight);
/** All lattice momenta of the module with momentum weight <= maxConf and h-weight in [hLo, hHi]. */
std::vector<RatVec> module_momenta(const ModuleSpec& m, const Rat& maxConf, const Rat& hLo, const Rat& hHi);
/** All sorted mode lists of total depth n over dim generators. */
std::vector<ModeList> colored_partitions(int n, int dim);

} // namespace voaforge

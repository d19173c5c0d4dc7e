#pragma once

#include "voaforge/rat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace voaforge {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/**
 * Quadratic space with named generators and a rational Gram matrix.
 *
 * An optional lattice basis fixes the 2-cocycle used by vertex operators:
 * eps(b_i, b_j) = (-1)^{(b_i,b_j) + (b_i,b_i)(b_j,b_j)} for i < j and 1 otherwise,
 * extended bimultiplicatively. Vectors outside the lattice get eps = 1.
 */
class QuadSpace {
  public:
    QuadSpace() = default;
    QuadSpace(std::vector<std::string> names, RatMat gram);

    size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const RatMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    /** Index of a generator; throws MathError("unknown generator <name>"). */
    size_t index(const std::string& name) const;
    bool has(const std::string& name) const;

    /** Extra spellings for vectors, e.g. "sqrtp*alpha" for the rescaled generator. */
    void add_alias(const std::string& name, RatVec v) { aliases_[name] = std::move(v); }
    const RatVec* alias(const std::string& name) const;

    Rat pair(const RatVec& a, const RatVec& b) const;
    /** Gram matrix times a: the functional b -> (a, b) in coordinates. */
    RatVec dual(const RatVec& a) const;

    void set_lattice_basis(RatMat basis);
    const RatMat& lattice_basis() const { return basis_; }
    /** Integer coordinates in the lattice basis, if the vector lies in the lattice. */
    std::optional<std::vector<long>> lattice_coords(const RatVec& v) const;
    int cocycle(const RatVec& x, const RatVec& y) const;

    std::string vec_str(const RatVec& v) const;
    RatVec unit(size_t i) const;
    RatVec zero() const { return RatVec(dim(), Rat(0)); }

  private:
    std::string label_;
    std::vector<std::string> names_;
    RatMat gram_;
    RatMat basis_;
    RatMat basis_inv_;
    std::vector<std::vector<int>> eps_;
    std::map<std::string, RatVec> aliases_;
};

using SpacePtr = std::shared_ptr<const QuadSpace>;

/** Vector in a quadratic space. */
struct WeightVector {
    SpacePtr space;
    RatVec c;

    WeightVector() = default;
    WeightVector(SpacePtr s, RatVec v);
    static WeightVector named(SpacePtr s, const std::string& gen);

    friend WeightVector operator+(const WeightVector& a, const WeightVector& b);
    friend WeightVector operator-(const WeightVector& a, const WeightVector& b);
    friend WeightVector operator*(const Rat& k, const WeightVector& a);
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.c == b.c; }
    std::string str() const { return space->vec_str(c); }
};

Rat pair(const WeightVector& a, const WeightVector& b);

/** Orthogonal direct sum; duplicate names are an error. */
QuadSpace tensor(const std::vector<QuadSpace>& spaces);

/** Global switch used to inject a cocycle sign fault for negative tests. */
void set_cocycle_fault(bool on);
bool cocycle_fault();

namespace spaces {

/** pi^alpha: one generator alpha with (alpha, alpha) = 2. */
SpacePtr heisenberg_alpha();
/**
 * Pi[0] x V_{sqrt(p) A1} in the rescaled basis {u, v, A}, A = sqrt(p) alpha,
 * Gram diag(1, -1, 2p). Lattice basis u+v, u, A.
 */
SpacePtr pi0_lattice(long p);
/** Rank one space {u} with (u, u) = 1, used for the p = 1 singlet. */
SpacePtr singlet_u();
/** V_Z x pi^{alpha, alpha'} with Gram diag(1, 2, -2). */
SpacePtr super_xaa();
/** Same space with alpha and alpha' divided by sqrt(p): Gram diag(1, 2/p, -2/p). */
SpacePtr super_rescaled(long p);

} // namespace spaces

/** a_{r,s} = ((1-s)p + r - 1)/(2p). */
Rat a_rs(long p, long r, long s);
/** lambda_{r,s} = s - 1 - (r-1)/p, in units of the fundamental weight. */
Rat lambda_rs(long p, long r, long s);
/** Delta_{r,s} = ((sp - r + 1)^2 - p^2)/(4p). */
Rat delta_rs(long p, long r, long s);

/**
 * Named vectors: "alpha_rs" (in pi0_lattice(p), as a multiple of A), "varpi",
 * "beta1a", "beta2a" (super_rescaled), "beta1s", "beta2s" (super_xaa),
 * "beta1a_hat" and friends for the alpha/alpha' parts.
 */
WeightVector named_weight(const std::string& name, long p, long r = 1, long s = 1);

} // namespace voaforge

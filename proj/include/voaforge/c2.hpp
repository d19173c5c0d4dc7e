#pragma once

#include "voaforge/rat.hpp"
#include "voaforge/report.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace voaforge {

using Exponent = std::vector<int>;

/** Graded lexicographic order; the first variable is the largest. Returns true if a > b. */
bool grlex_greater(const Exponent& a, const Exponent& b);

struct GrlexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_greater(a, b); }
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

/** Sparse commutative polynomial over Q; terms are kept in decreasing grlex order. */
class CommPoly {
  public:
    CommPoly() = default;
    explicit CommPoly(VarList vars) : vars_(std::move(vars)) {}
    static CommPoly constant(VarList vars, const Rat& c);
    static CommPoly variable(VarList vars, size_t i);
    static CommPoly variable(VarList vars, const std::string& name);
    static CommPoly monomial(VarList vars, const Rat& c, Exponent e);

    const VarList& vars() const { return vars_; }
    size_t nvars() const { return vars_->size(); }
    const std::map<Exponent, Rat, GrlexDesc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Exponent& lead_exp() const;
    const Rat& lead_coeff() const;
    int total_degree() const;
    bool homogeneous() const;

    void add(const Exponent& e, const Rat& c);
    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend CommPoly operator*(const Rat& c, CommPoly a);
    CommPoly operator-() const { return Rat(-1) * *this; }
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }
    CommPoly pow(unsigned n) const;

    CommPoly derivative(size_t i) const;
    /** Replace variable i by images[i]; images share one target variable list. */
    CommPoly substitute(const std::vector<CommPoly>& images) const;

    std::string str() const;

  private:
    VarList vars_;
    std::map<Exponent, Rat, GrlexDesc> terms_;
};

VarList make_vars(std::vector<std::string> names);

/** Normal form of f modulo G by full reduction. */
CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& G);
/** Reduced, monic Groebner basis (Buchberger with the product and chain criteria). */
std::vector<CommPoly> groebner(const std::vector<CommPoly>& gens);
bool ideal_member(const CommPoly& f, const std::vector<CommPoly>& G);
/** Every S-polynomial of G reduces to zero. */
bool is_groebner(const std::vector<CommPoly>& G);
/** Ideals equal iff each generator set lies in the other's Groebner basis. */
bool ideals_equal(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b);

/** Derivation given by the images of the variables. */
struct Derivation {
    std::vector<CommPoly> images;
    CommPoly apply(const CommPoly& f) const;
};

/** Poisson bracket from a table of brackets of the variables. */
struct PoissonTable {
    std::vector<std::vector<CommPoly>> table;
    CommPoly bracket(const CommPoly& f, const CommPoly& g) const;
    Derivation adjoint(const CommPoly& f) const;
};

/** Q[h, e, f, a] with the sl2 Lie-Poisson bracket; a is central. */
VarList sl2_vars();
PoissonTable sl2_poisson();
/** Q[a, beta, gamma], a = alpha/sqrt(p), {beta, gamma} = 1 and a central. */
VarList bga_vars();
PoissonTable bga_poisson();

/** e -> beta, h -> -2 beta gamma - a, f -> -beta gamma^2 - gamma a, a -> a. */
CommPoly c2_map(const CommPoly& f);
/** Omega = h^2 + 4ef. */
CommPoly casimir();

/** x01^2, x01 x11, x11^2 + x01 x21, x11 x21, x21^2 in Q[h, e, f, a] with the scalar eps set to 1. */
std::vector<CommPoly> nilpotent_family_sl2(long p);
/** The same five elements pushed to Q[a, beta, gamma] by c2_map. */
std::vector<CommPoly> nilpotent_family(long p);
/** (a^{4p}, a^{4p-1} beta, a^{4p-2} beta^2). */
std::vector<CommPoly> target_ideal(long p);

/** If a^N lies in the ideal and D preserves it, checks (Da)^{N^2} lies in it too. */
Report derivation_nilpotency(const std::vector<CommPoly>& ideal, const Derivation& D, const CommPoly& a, unsigned N);

Report c2_ideal_equality(long p);
Report c2_casimir(long p);
Report c2_nilpotency(long p);

} // namespace voaforge

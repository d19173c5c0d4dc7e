#pragma once

#include "voaforge/cyclo.hpp"

#include <map>
#include <string>
#include <vector>

namespace voaforge {

using Word = std::vector<int>;

/** Degree-lexicographic order on words (shorter first, then by letter index). */
struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/** Element of a free associative algebra over Q(zeta_order). */
class NCExpr {
  public:
    NCExpr() = default;
    explicit NCExpr(int order) : order_(order) {}
    static NCExpr scalar(int order, const Cyclo& c);
    static NCExpr scalar(int order, const Rat& c) { return scalar(order, Cyclo(order, c)); }
    static NCExpr letter(int order, int g);
    static NCExpr word(int order, const Word& w, const Cyclo& c);

    int order() const { return order_; }
    const std::map<Word, Cyclo, DeglexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /** Largest word in deglex order. */
    const Word& lead_word() const;
    const Cyclo& lead_coeff() const;
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const Cyclo& c);
    NCExpr& operator+=(const NCExpr& o);
    NCExpr& operator-=(const NCExpr& o);
    friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
    friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
    friend NCExpr operator*(const NCExpr& a, const NCExpr& b);
    friend NCExpr operator*(const Cyclo& c, NCExpr a);
    friend NCExpr operator*(const Rat& c, const NCExpr& a) { return Cyclo(a.order_, c) * a; }
    NCExpr operator-() const { return Rat(-1) * *this; }
    friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.terms_ == b.terms_; }
    NCExpr pow(unsigned n) const;

    std::string str(const std::vector<std::string>& alphabet) const;

  private:
    int order_ = 1;
    std::map<Word, Cyclo, DeglexLess> terms_;
};

/** Rewrite rule lhs -> rhs. */
struct Rule {
    Word lhs;
    NCExpr rhs;
    std::string label;
};

enum class Strategy { Leftmost, Rightmost };

struct Reduction {
    NCExpr normal;
    bool complete = true;
    long steps = 0;
};

/** Step budget: 100000 unless VOA_FORGE_MAX_STEPS is set. */
long default_max_steps();

class RewriteSystem {
  public:
    RewriteSystem() = default;
    explicit RewriteSystem(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    void add(Rule r);
    bool irreducible(const Word& w) const;
    /** Rewrites until no rule applies or the step budget runs out. */
    Reduction reduce(const NCExpr& e, long maxSteps, Strategy s = Strategy::Leftmost) const;

  private:
    // (position, rule index) of the chosen match, or rule index -1.
    std::pair<size_t, long> find_match(const Word& w, Strategy s) const;

    std::vector<Rule> rules_;
    std::map<int, std::vector<size_t>> by_first_;
};

/**
 * Noncommutative Groebner basis (deglex) of homogeneous relations, computed by
 * overlap resolution up to total degree maxDeg, returned as rewrite rules.
 */
std::vector<Rule> complete_homogeneous(const std::vector<NCExpr>& relations, size_t maxDeg);

/** Irreducible words over the given letters, by length, up to maxLen. */
std::vector<Word> irreducible_words(const RewriteSystem& rs, const std::vector<int>& letters, size_t maxLen);

/** Replace each letter g by images[g]. */
NCExpr substitute(const NCExpr& e, const std::vector<NCExpr>& images);

} // namespace voaforge

#pragma once

#include "voaforge/biseries.hpp"
#include "voaforge/report.hpp"

#include <string>
#include <vector>

namespace voaforge {

/** Truncation: q-exponents below order, z-exponents in [zlo, zhi] (units of the fundamental weight). */
struct Window {
    Rat order{5};
    Rat zlo{-6};
    Rat zhi{6};
};

/** Pochhammer argument z^z q^q. */
struct PochArg {
    Rat z;
    Rat q;
};

/** (a_1, ..., a_m; q)_infinity truncated below q^order. */
BiSeries pochhammer(const std::vector<PochArg>& args, const Rat& order);
/**
 * 1/(a_1, ..., a_m; q)_infinity. A factor (1 - z^m) at q^0 is expanded in powers of z^m, which
 * needs m < 0 (series kept down to zBound); m >= 0 at q^0 does not converge.
 */
BiSeries pochhammer_inverse(const std::vector<PochArg>& args, const Rat& order, const Rat& zBound);

/** Finite sl2 character z^n + z^{n-2} + ... + z^{-n}; with w = true the variable is w. */
BiSeries sl2_character(long n, bool w = false);

enum class CharKind { Fock, BetaGamma, LatticeModule, SimpleAffine, Weyl, Singlet, FtAlgebra, PiH };

CharKind char_kind_from_string(const std::string& s);
std::string char_kind_name(CharKind k);

/**
 * Parameters by kind: Fock (lambda, delta); BetaGamma (none); LatticeModule (p, r, s; w-graded);
 * SimpleAffine (p, r, s): highest weight lambda_{r,s}; Weyl (p, n); Singlet (n, p = 1);
 * FtAlgebra (p); PiH (n: h-weight n varpi, p = 1).
 */
struct CharSpec {
    CharKind kind = CharKind::Fock;
    long p = 1;
    long r = 1;
    long s = 1;
    long n = 0;
    Rat lambda{0};
    Rat delta{0};
};

BiSeries character(const CharSpec& spec, const Window& win);

/** Conformal weight of pi^h_{n varpi} inside FT_1, computed with the free field conformal vectors. */
Rat pi_h_weight(long n);

/** Weyl symmetrisation sum_m chi_m(w) (A_m - A_{-m-2}) of a w-graded series A. */
BiSeries atiyah_bott_character(const BiSeries& A);

Report weyl_simple_check(long p, long n, const Window& win);
/** sum_n chi_{2n+s-1}(w) ch L(lambda_{r,2n+s}) against the Weyl symmetrisation of ch(beta gamma x V_{r,s}). */
Report decomposition_check(long p, long r, long s, const Window& win);
/** ch FT_1 = sum_{n+m even} ch M_n ch M_m ch pi^h_{(n+m) varpi}. perturb adds q^2 to ch M_1 (negative test). */
Report p1_decomposition_check(const Window& win, bool perturb = false);
/** CT_w extraction of ch L(lambda_{-r,-2n-s}) from the w-graded free field characters. */
Report ct_pipeline_check(long p, long r, long n, long s, const Window& win);

/** {"terms": [{"q", "z", "w"?, "c"}], "qOrder", "zWindow"}; exponents and coefficients as exact strings. */
json series_json(const BiSeries& s);

/** Coefficient of z^h q^d in a series. */
Rat char_coeff(const BiSeries& s, const Rat& h, const Rat& d);

} // namespace voaforge

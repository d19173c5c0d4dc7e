#include "voaforge/lattice.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace voaforge {

namespace {

std::atomic<bool> g_fault{false};

RatMat invert(const RatMat& m) {
    const size_t n = m.size();
    RatMat a = m;
    RatMat inv(n, RatVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw MathError("lattice basis is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat f = Rat(1) / a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rat g = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= g * a[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

long parity_of(const Rat& x) {
    mpz_class n = x.num();
    return mpz_odd_p(n.get_mpz_t()) ? 1 : 0;
}

} // namespace

void set_cocycle_fault(bool on) { g_fault = on; }
bool cocycle_fault() { return g_fault; }

QuadSpace::QuadSpace(std::vector<std::string> names, RatMat gram) : names_(std::move(names)), gram_(std::move(gram)) {
    if (gram_.size() != names_.size()) throw MathError("Gram matrix size does not match generator count");
    for (size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i].size() != names_.size()) throw MathError("Gram matrix is not square");
        for (size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) throw MathError("Gram matrix is not symmetric");
    }
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw MathError("duplicate generator names");
}

size_t QuadSpace::index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw MathError("unknown generator " + name);
}

bool QuadSpace::has(const std::string& name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

const RatVec* QuadSpace::alias(const std::string& name) const {
    auto it = aliases_.find(name);
    return it == aliases_.end() ? nullptr : &it->second;
}

Rat QuadSpace::pair(const RatVec& a, const RatVec& b) const {
    if (a.size() != dim() || b.size() != dim()) throw MathError("vector dimension mismatch");
    Rat s(0);
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j)
            if (!b[j].is_zero() && !gram_[i][j].is_zero()) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

RatVec QuadSpace::dual(const RatVec& a) const {
    RatVec out(dim(), Rat(0));
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j)
            if (!a[j].is_zero()) out[i] += gram_[i][j] * a[j];
    return out;
}

void QuadSpace::set_lattice_basis(RatMat basis) {
    if (basis.size() != dim()) throw MathError("lattice basis must have full rank");
    basis_ = std::move(basis);
    basis_inv_ = invert(basis_);
    const size_t n = dim();
    eps_.assign(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Rat bij = pair(basis_[i], basis_[j]);
            Rat bii = pair(basis_[i], basis_[i]);
            Rat bjj = pair(basis_[j], basis_[j]);
            if (!bij.is_integer() || !bii.is_integer() || !bjj.is_integer())
                throw MathError("lattice basis is not integral");
            eps_[i][j] = static_cast<int>((parity_of(bij) + parity_of(bii) * parity_of(bjj)) % 2);
        }
}

std::optional<std::vector<long>> QuadSpace::lattice_coords(const RatVec& v) const {
    if (basis_.empty()) return std::nullopt;
    std::vector<long> out(dim());
    // v = sum_i c_i basis_i, i.e. c = v * basis^{-1} as row vectors.
    for (size_t j = 0; j < dim(); ++j) {
        Rat s(0);
        for (size_t i = 0; i < dim(); ++i)
            if (!v[i].is_zero()) s += v[i] * basis_inv_[i][j];
        if (!s.is_integer()) return std::nullopt;
        out[j] = s.to_long();
    }
    return out;
}

int QuadSpace::cocycle(const RatVec& x, const RatVec& y) const {
    auto cx = lattice_coords(x);
    if (!cx) return 1;
    auto cy = lattice_coords(y);
    if (!cy) return 1;
    long e = 0;
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = i + 1; j < dim(); ++j)
            if (eps_[i][j]) e += (*cx)[i] * (*cy)[j];
    if (g_fault) e += (*cx)[0] * (*cy)[0];
    return (e % 2 == 0) ? 1 : -1;
}

std::string QuadSpace::vec_str(const RatVec& v) const {
    std::string out;
    for (size_t i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        Rat a = v[i].abs();
        std::string term = (a == Rat(1) ? "" : a.str() + "*") + names_[i];
        if (out.empty()) out = (v[i].sign() < 0 ? "-" : "") + term;
        else out += (v[i].sign() < 0 ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
}

RatVec QuadSpace::unit(size_t i) const {
    RatVec v = zero();
    v.at(i) = Rat(1);
    return v;
}

WeightVector::WeightVector(SpacePtr s, RatVec v) : space(std::move(s)), c(std::move(v)) {
    if (c.size() != space->dim()) throw MathError("vector dimension mismatch");
}

WeightVector WeightVector::named(SpacePtr s, const std::string& gen) {
    if (const RatVec* a = s->alias(gen)) return WeightVector(s, *a);
    size_t i = s->index(gen);
    return WeightVector(s, s->unit(i));
}

static void same_space(const WeightVector& a, const WeightVector& b) {
    if (a.space != b.space && (a.space->names() != b.space->names() || a.space->gram() != b.space->gram()))
        throw MathError("vectors live in different spaces");
}

WeightVector operator+(const WeightVector& a, const WeightVector& b) {
    same_space(a, b);
    RatVec c = a.c;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c[i];
    return WeightVector(a.space, c);
}

WeightVector operator-(const WeightVector& a, const WeightVector& b) {
    same_space(a, b);
    RatVec c = a.c;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c[i];
    return WeightVector(a.space, c);
}

WeightVector operator*(const Rat& k, const WeightVector& a) {
    RatVec c = a.c;
    for (auto& x : c) x *= k;
    return WeightVector(a.space, c);
}

Rat pair(const WeightVector& a, const WeightVector& b) {
    same_space(a, b);
    return a.space->pair(a.c, b.c);
}

QuadSpace tensor(const std::vector<QuadSpace>& spaces) {
    std::vector<std::string> names;
    size_t n = 0;
    for (const auto& s : spaces) n += s.dim();
    RatMat gram(n, RatVec(n, Rat(0)));
    size_t off = 0;
    bool all_lattice = !spaces.empty();
    for (const auto& s : spaces) {
        for (size_t i = 0; i < s.dim(); ++i) {
            names.push_back(s.names()[i]);
            for (size_t j = 0; j < s.dim(); ++j) gram[off + i][off + j] = s.gram()[i][j];
        }
        if (s.lattice_basis().empty()) all_lattice = false;
        off += s.dim();
    }
    QuadSpace out(names, gram);
    if (all_lattice && n > 0) {
        RatMat basis;
        off = 0;
        for (const auto& s : spaces) {
            for (const auto& row : s.lattice_basis()) {
                RatVec b(n, Rat(0));
                for (size_t j = 0; j < s.dim(); ++j) b[off + j] = row[j];
                basis.push_back(b);
            }
            off += s.dim();
        }
        out.set_lattice_basis(basis);
    }
    return out;
}

namespace spaces {

SpacePtr heisenberg_alpha() {
    static SpacePtr s = [] {
        auto q = std::make_shared<QuadSpace>(std::vector<std::string>{"alpha"}, RatMat{{Rat(2)}});
        q->set_lattice_basis({{Rat(1)}});
        q->set_label("pi_alpha");
        return q;
    }();
    return s;
}

SpacePtr pi0_lattice(long p) {
    if (p < 1) throw MathError("p must be positive");
    static std::mutex mu;
    static std::map<long, SpacePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
    auto q = std::make_shared<QuadSpace>(
        std::vector<std::string>{"u", "v", "A"},
        RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(0), Rat(0), Rat(2 * p)}});
    q->set_lattice_basis({{Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    q->add_alias("sqrtp*alpha", {Rat(0), Rat(0), Rat(1)});
    if (p == 1) q->add_alias("alpha", {Rat(0), Rat(0), Rat(1)});
    q->set_label("Pi0 x V(sqrt" + std::to_string(p) + " A1)");
    cache[p] = q;
    return q;
}

SpacePtr singlet_u() {
    static SpacePtr s = [] {
        auto q = std::make_shared<QuadSpace>(std::vector<std::string>{"u"}, RatMat{{Rat(1)}});
        q->set_lattice_basis({{Rat(1)}});
        q->set_label("pi_u");
        return q;
    }();
    return s;
}

SpacePtr super_xaa() {
    static SpacePtr s = [] {
        auto q = std::make_shared<QuadSpace>(
            std::vector<std::string>{"x", "alpha", "alphad"},
            RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(-2)}});
        q->set_label("V_Z x pi(alpha, alphad)");
        return q;
    }();
    return s;
}

SpacePtr super_rescaled(long p) {
    static std::mutex mu;
    static std::map<long, SpacePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
    auto q = std::make_shared<QuadSpace>(
        std::vector<std::string>{"x", "a", "ad"},
        RatMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(2, p), Rat(0)}, {Rat(0), Rat(0), Rat(-2, p)}});
    q->add_alias("alpha/sqrtp", {Rat(0), Rat(1), Rat(0)});
    q->add_alias("alphad/sqrtp", {Rat(0), Rat(0), Rat(1)});
    q->set_label("V_Z x pi(alpha, alphad) rescaled by sqrt" + std::to_string(p));
    cache[p] = q;
    return q;
}

} // namespace spaces

Rat a_rs(long p, long r, long s) { return Rat((1 - s) * p + r - 1, 2 * p); }

Rat lambda_rs(long p, long r, long s) { return Rat(s - 1) - Rat(r - 1, p); }

Rat delta_rs(long p, long r, long s) {
    Rat t(s * p - r + 1);
    return (t * t - Rat(p * p)) / Rat(4 * p);
}

WeightVector named_weight(const std::string& name, long p, long r, long s) {
    if (name == "alpha_rs") {
        if (r < 1 || r > p) throw MathError("alpha_rs needs 1 <= r <= p");
        auto sp = spaces::pi0_lattice(p);
        return WeightVector(sp, {Rat(0), Rat(0), Rat(-(s - 1), 2) + Rat(r - 1, 2 * p)});
    }
    if (name == "varpi") {
        auto sp = spaces::heisenberg_alpha();
        return WeightVector(sp, {Rat(1, 2)});
    }
    if (name == "beta1a" || name == "beta1a_hat") {
        auto sp = spaces::super_rescaled(p);
        return WeightVector(sp, {Rat(0), Rat(-1), Rat(0)});
    }
    if (name == "beta2a" || name == "beta2a_hat") {
        auto sp = spaces::super_rescaled(p);
        return WeightVector(sp, {Rat(name == "beta2a" ? 1 : 0), Rat(1, 2), Rat(-1, 2)});
    }
    if (name == "beta1s" || name == "beta1s_hat") {
        auto sp = spaces::super_xaa();
        return WeightVector(sp, {Rat(name == "beta1s" ? 1 : 0), Rat(-1, 2), Rat(-1, 2)});
    }
    if (name == "beta2s" || name == "beta2s_hat") {
        auto sp = spaces::super_xaa();
        return WeightVector(sp, {Rat(name == "beta2s" ? 1 : 0), Rat(1, 2), Rat(-1, 2)});
    }
    throw MathError("unknown weight " + name);
}

} // namespace voaforge

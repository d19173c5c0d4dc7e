#include "voaforge/biseries.hpp"

#include <algorithm>
#include <sstream>

namespace voaforge {

namespace {

std::optional<Rat> opt_min(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

std::optional<Rat> opt_max(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
}

} // namespace

BiSeries BiSeries::zero() { return BiSeries(); }

BiSeries BiSeries::one() { return monomial(Rat(1), Rat(0), Rat(0)); }

BiSeries BiSeries::monomial(const Rat& c, const Rat& q, const Rat& z, long w) {
    BiSeries s;
    s.has_w_ = (w != 0);
    s.add_term(c, q, z, w);
    return s;
}

BiSeries BiSeries::geometric_z(const Rat& m, const Rat& bound) {
    if (m.is_zero()) throw MathError("geometric series in z^0 does not converge");
    BiSeries s;
    if (m.sign() < 0) {
        if (bound.sign() > 0) throw MathError("window bound above the constant term");
        for (Rat e(0); e >= bound; e += m) s.add_term(Rat(1), Rat(0), e);
        s.z_lo_ = bound;
    } else {
        if (bound.sign() < 0) throw MathError("window bound below the constant term");
        for (Rat e(0); e <= bound; e += m) s.add_term(Rat(1), Rat(0), e);
        s.z_hi_ = bound;
    }
    return s;
}

void BiSeries::check_congruence(const SeriesKey& k) const {
    if (terms_.empty()) return;
    const SeriesKey& f = terms_.begin()->first;
    if (!(k.q - f.q).is_integer())
        throw MathError("q-exponents " + k.q.str() + " and " + f.q.str() + " are not congruent mod 1");
    if (!(k.z - f.z).is_integer())
        throw MathError("z-exponents " + k.z.str() + " and " + f.z.str() + " are not congruent mod 1");
}

bool BiSeries::inside(const SeriesKey& k) const {
    if (q_order_ && k.q >= *q_order_) return false;
    if (z_lo_ && k.z < *z_lo_) return false;
    if (z_hi_ && k.z > *z_hi_) return false;
    return true;
}

Rat BiSeries::coeff(const Rat& q, const Rat& z, long w) const {
    auto it = terms_.find(SeriesKey{q, z, w});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BiSeries::add_term(const Rat& c, const Rat& q, const Rat& z, long w) {
    if (c.is_zero()) return;
    SeriesKey k{q, z, w};
    if (!inside(k)) return;
    check_congruence(k);
    if (w != 0) has_w_ = true;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiSeries& BiSeries::truncate(const Rat& order) {
    q_order_ = opt_min(q_order_, order);
    for (auto it = terms_.begin(); it != terms_.end();)
        it = inside(it->first) ? std::next(it) : terms_.erase(it);
    return *this;
}

BiSeries& BiSeries::clip(const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    z_lo_ = opt_max(z_lo_, lo);
    z_hi_ = opt_min(z_hi_, hi);
    for (auto it = terms_.begin(); it != terms_.end();)
        it = inside(it->first) ? std::next(it) : terms_.erase(it);
    return *this;
}

BiSeries BiSeries::operator-() const {
    BiSeries r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r;
    r.q_order_ = opt_min(a.q_order_, b.q_order_);
    r.z_lo_ = opt_max(a.z_lo_, b.z_lo_);
    r.z_hi_ = opt_min(a.z_hi_, b.z_hi_);
    r.has_w_ = a.has_w_ || b.has_w_;
    for (const auto& [k, c] : a.terms_) r.add_term(c, k.q, k.z, k.w);
    for (const auto& [k, c] : b.terms_) r.add_term(c, k.q, k.z, k.w);
    return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + (-b); }

BiSeries operator*(const BiSeries& a, const Rat& c) {
    BiSeries r = a;
    if (c.is_zero()) {
        r.terms_.clear();
        return r;
    }
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

std::optional<Rat> BiSeries::min_q() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.q;
}

std::optional<Rat> BiSeries::max_z() const {
    std::optional<Rat> m;
    for (const auto& [k, c] : terms_) m = opt_max(m, k.z);
    return m;
}

std::optional<Rat> BiSeries::min_z() const {
    std::optional<Rat> m;
    for (const auto& [k, c] : terms_) m = opt_min(m, k.z);
    return m;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if ((a.z_lo_ && b.z_hi_) || (a.z_hi_ && b.z_lo_))
        throw MathError("incompatible windows: one factor is truncated below in z and the other above");
    BiSeries r;
    r.has_w_ = a.has_w_ || b.has_w_;
    // Lowest q-exponent that a factor can contribute, counting its unknown tail.
    auto low_q = [](const BiSeries& s) { return opt_min(s.min_q(), s.q_order_); };
    std::optional<Rat> order;
    if (a.q_order_) {
        auto lb = low_q(b);
        if (lb) order = opt_min(order, *a.q_order_ + *lb);
    }
    if (b.q_order_) {
        auto la = low_q(a);
        if (la) order = opt_min(order, *b.q_order_ + *la);
    }
    if (a.q_order_ && b.q_order_ && !order) order = *a.q_order_ + *b.q_order_;
    r.q_order_ = order;
    std::optional<Rat> lo, hi;
    if (a.z_lo_) lo = opt_max(lo, b.max_z() ? std::optional<Rat>(*a.z_lo_ + *b.max_z()) : std::nullopt);
    if (b.z_lo_) lo = opt_max(lo, a.max_z() ? std::optional<Rat>(*b.z_lo_ + *a.max_z()) : std::nullopt);
    if (a.z_hi_) hi = opt_min(hi, b.min_z() ? std::optional<Rat>(*a.z_hi_ + *b.min_z()) : std::nullopt);
    if (b.z_hi_) hi = opt_min(hi, a.min_z() ? std::optional<Rat>(*b.z_hi_ + *a.min_z()) : std::nullopt);
    // A zero factor that is only partially known leaves the product unknown on its side.
    if ((a.z_lo_ || b.z_lo_) && !lo) lo = opt_max(a.z_lo_, b.z_lo_);
    if ((a.z_hi_ || b.z_hi_) && !hi) hi = opt_min(a.z_hi_, b.z_hi_);
    r.z_lo_ = lo;
    r.z_hi_ = hi;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            Rat q = ka.q + kb.q;
            if (r.q_order_ && q >= *r.q_order_) break;
            r.add_term(ca * cb, q, ka.z + kb.z, ka.w + kb.w);
        }
    }
    return r;
}

BiSeries BiSeries::inverse() const {
    if (terms_.empty()) throw MathError("inverse of zero series");
    if (z_lo_ || z_hi_)
        throw MathError("inverse needs a series exact in z; expand factors like (1 - z^-2) with geometric_z");
    const Rat e = terms_.begin()->first.q;
    auto second = std::next(terms_.begin());
    if (second != terms_.end() && second->first.q == e)
        throw MathError("non-unit leading structure at q^" + e.str() +
                        " (several z-terms); use the expansion-region convention (geometric_z) instead");
    const SeriesKey lead = terms_.begin()->first;
    const Rat lc = terms_.begin()->second;
    if (!q_order_) {
        if (terms_.size() == 1) return monomial(Rat(1) / lc, -lead.q, -lead.z, -lead.w);
        throw MathError("inverse of an exact non-monomial series needs a truncation order");
    }
    // a = lc*q^e*z^m*w^k*(1 + r), with r of strictly positive q-degree.
    BiSeries r = shift(-lead.q, -lead.z, -lead.w) * (Rat(1) / lc);
    r = r - one();
    r.q_order_ = *q_order_ - e;
    const Rat target = *q_order_ - e;
    Rat gap = *r.min_q();
    BiSeries acc = one();
    acc.q_order_ = target;
    BiSeries power = one();
    power.q_order_ = target;
    BiSeries neg_r = -r;
    for (Rat deg = gap; deg < target; deg += gap) {
        power = power * neg_r;
        power.truncate(target);
        acc = acc + power;
    }
    BiSeries out = acc.shift(-lead.q, -lead.z, -lead.w) * (Rat(1) / lc);
    out.q_order_ = target - e;
    out.truncate(target - e);
    return out;
}

BiSeries BiSeries::shift(const Rat& dq, const Rat& dz, long dw) const {
    BiSeries r;
    if (q_order_) r.q_order_ = *q_order_ + dq;
    if (z_lo_) r.z_lo_ = *z_lo_ + dz;
    if (z_hi_) r.z_hi_ = *z_hi_ + dz;
    r.has_w_ = has_w_ || dw != 0;
    for (const auto& [k, c] : terms_) r.add_term(c, k.q + dq, k.z + dz, k.w + dw);
    return r;
}

BiSeries BiSeries::w_coeff(long k) const {
    BiSeries r;
    r.q_order_ = q_order_;
    r.z_lo_ = z_lo_;
    r.z_hi_ = z_hi_;
    for (const auto& [key, c] : terms_)
        if (key.w == k) r.add_term(c, key.q, key.z, 0);
    return r;
}

BiSeries BiSeries::ct_w() const { return w_coeff(0); }

BiSeries BiSeries::w_to_one() const {
    BiSeries r;
    r.q_order_ = q_order_;
    r.z_lo_ = z_lo_;
    r.z_hi_ = z_hi_;
    for (const auto& [key, c] : terms_) r.add_term(c, key.q, key.z, 0);
    return r;
}

std::optional<SeriesKey> BiSeries::first_difference(const BiSeries& o) const {
    BiSeries d = *this - o;
    if (d.terms_.empty()) return std::nullopt;
    return d.terms_.begin()->first;
}

std::string BiSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (!k.q.is_zero()) os << "*q^" << k.q.str();
        if (!k.z.is_zero()) os << "*z^" << k.z.str();
        if (k.w != 0) os << "*w^" << k.w;
    }
    if (first) os << "0";
    if (q_order_) os << " + O(q^" << q_order_->str() << ")";
    return os.str();
}

} // namespace voaforge

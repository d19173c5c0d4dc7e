#include "voaforge/ncalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace voaforge {

NCExpr NCExpr::scalar(int order, const Cyclo& c) {
    NCExpr e(order);
    e.add({}, c);
    return e;
}

NCExpr NCExpr::letter(int order, int g) {
    NCExpr e(order);
    e.add({g}, Cyclo(order, Rat(1)));
    return e;
}

NCExpr NCExpr::word(int order, const Word& w, const Cyclo& c) {
    NCExpr e(order);
    e.add(w, c);
    return e;
}

const Word& NCExpr::lead_word() const {
    if (terms_.empty()) throw MathError("leading word of zero");
    return terms_.rbegin()->first;
}

const Cyclo& NCExpr::lead_coeff() const {
    if (terms_.empty()) throw MathError("leading word of zero");
    return terms_.rbegin()->second;
}

void NCExpr::add(const Word& w, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCExpr& NCExpr::operator+=(const NCExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCExpr operator*(const NCExpr& a, const NCExpr& b) {
    NCExpr r(a.order_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

NCExpr operator*(const Cyclo& c, NCExpr a) {
    if (c.is_zero()) return NCExpr(a.order_);
    for (auto& [w, v] : a.terms_) v *= c;
    return a;
}

NCExpr NCExpr::pow(unsigned n) const {
    NCExpr r = scalar(order_, Rat(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string NCExpr::str(const std::vector<std::string>& alphabet) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out += " + ";
        first = false;
        std::string w;
        for (int g : it->first) {
            if (!w.empty()) w += " ";
            w += alphabet.at(static_cast<size_t>(g));
        }
        if (w.empty()) out += "(" + it->second.str() + ")";
        else if (it->second.is_one()) out += w;
        else out += "(" + it->second.str() + ") " + w;
    }
    return out;
}

long default_max_steps() {
    if (const char* s = std::getenv("VOA_FORGE_MAX_STEPS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return 100000;
}

RewriteSystem::RewriteSystem(std::vector<Rule> rules) {
    for (auto& r : rules) add(std::move(r));
}

void RewriteSystem::add(Rule r) {
    if (r.lhs.empty()) throw MathError("rewrite rule with empty left side");
    by_first_[r.lhs.front()].push_back(rules_.size());
    rules_.push_back(std::move(r));
}

std::pair<size_t, long> RewriteSystem::find_match(const Word& w, Strategy s) const {
    const size_t n = w.size();
    for (size_t k = 0; k < n; ++k) {
        const size_t pos = s == Strategy::Leftmost ? k : n - 1 - k;
        auto it = by_first_.find(w[pos]);
        if (it == by_first_.end()) continue;
        for (size_t ri : it->second) {
            const Word& l = rules_[ri].lhs;
            if (pos + l.size() > n) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos))) return {pos, static_cast<long>(ri)};
        }
    }
    return {0, -1};
}

bool RewriteSystem::irreducible(const Word& w) const { return find_match(w, Strategy::Leftmost).second < 0; }

Reduction RewriteSystem::reduce(const NCExpr& e, long maxSteps, Strategy s) const {
    Reduction out;
    out.normal = NCExpr(e.order());
    std::map<Word, Cyclo, DeglexLess> pending = e.terms();
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Cyclo c = it->second;
        pending.erase(it);
        auto [pos, ri] = find_match(w, s);
        if (ri < 0) {
            out.normal.add(w, c);
            continue;
        }
        if (out.steps >= maxSteps) {
            out.complete = false;
            out.normal.add(w, c);
            for (const auto& [w2, c2] : pending) out.normal.add(w2, c2);
            return out;
        }
        ++out.steps;
        const Rule& r = rules_[static_cast<size_t>(ri)];
        for (const auto& [rw, rc] : r.rhs.terms()) {
            Word nw(w.begin(), w.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(pos + r.lhs.size()), w.end());
            Cyclo nc = c * rc;
            auto [pit, fresh] = pending.emplace(nw, nc);
            if (!fresh) {
                pit->second += nc;
                if (pit->second.is_zero()) pending.erase(pit);
            }
        }
    }
    return out;
}

namespace {

Rule monic_rule(const NCExpr& f) {
    const Word lw = f.lead_word();
    NCExpr g = f.lead_coeff().inverse() * f;
    NCExpr rhs = -g;
    rhs.add(lw, Cyclo(f.order(), Rat(1)));
    return Rule{lw, rhs, {}};
}

bool contains(const Word& big, const Word& small) {
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

} // namespace

std::vector<Rule> complete_homogeneous(const std::vector<NCExpr>& relations, size_t maxDeg) {
    RewriteSystem rs;
    std::vector<NCExpr> polys;
    const long budget = 1L << 40;
    auto insert = [&](const NCExpr& f) {
        NCExpr r = rs.reduce(f, budget).normal;
        if (r.is_zero()) return false;
        Rule rule = monic_rule(r);
        NCExpr p = NCExpr::word(r.order(), rule.lhs, Cyclo(r.order(), Rat(1))) - rule.rhs;
        rs.add(rule);
        polys.push_back(p);
        return true;
    };
    for (const auto& f : relations) insert(f);
    size_t done = 0;
    std::vector<std::pair<size_t, size_t>> queue;
    for (;;) {
        for (size_t j = done; j < polys.size(); ++j)
            for (size_t i = 0; i <= j; ++i) {
                queue.push_back({i, j});
                if (i != j) queue.push_back({j, i});
            }
        done = polys.size();
        if (queue.empty()) break;
        auto pairs = std::move(queue);
        queue.clear();
        for (auto [i, j] : pairs) {
            const Word& a = polys[i].lead_word();
            const Word& b = polys[j].lead_word();
            for (size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
                if (a.size() + b.size() - k > maxDeg) continue;
                if (!std::equal(a.end() - static_cast<long>(k), a.end(), b.begin())) continue;
                Word v(b.begin() + static_cast<long>(k), b.end());
                Word u(a.begin(), a.end() - static_cast<long>(k));
                const int ord = polys[i].order();
                NCExpr s = polys[i] * NCExpr::word(ord, v, Cyclo(ord, Rat(1))) -
                           NCExpr::word(ord, u, Cyclo(ord, Rat(1))) * polys[j];
                insert(s);
            }
            // inclusion of one leading word in another
            if (i != j && a.size() > b.size() && contains(a, b)) {
                auto at = std::search(a.begin(), a.end(), b.begin(), b.end());
                const int ord = polys[i].order();
                Word u(a.begin(), at), v(at + static_cast<long>(b.size()), a.end());
                insert(polys[i] - NCExpr::word(ord, u, Cyclo(ord, Rat(1))) * polys[j] *
                                      NCExpr::word(ord, v, Cyclo(ord, Rat(1))));
            }
        }
    }
    // interreduce: drop rules whose left side contains another left side, normalize right sides
    std::vector<Rule> kept;
    const auto& all = rs.rules();
    for (size_t i = 0; i < all.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < all.size() && !redundant; ++j) {
            if (i == j) continue;
            if (all[j].lhs == all[i].lhs) redundant = j < i;
            else redundant = contains(all[i].lhs, all[j].lhs);
        }
        if (!redundant) kept.push_back(all[i]);
    }
    RewriteSystem minimal(kept);
    for (auto& r : kept) r.rhs = minimal.reduce(r.rhs, budget).normal;
    std::sort(kept.begin(), kept.end(), [](const Rule& x, const Rule& y) { return DeglexLess{}(x.lhs, y.lhs); });
    return kept;
}

std::vector<Word> irreducible_words(const RewriteSystem& rs, const std::vector<int>& letters, size_t maxLen) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (size_t len = 1; len <= maxLen && !layer.empty(); ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int g : letters) {
                Word nw = w;
                nw.push_back(g);
                if (rs.irreducible(nw)) next.push_back(nw);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

NCExpr substitute(const NCExpr& e, const std::vector<NCExpr>& images) {
    NCExpr r(e.order());
    for (const auto& [w, c] : e.terms()) {
        NCExpr t = NCExpr::scalar(e.order(), c);
        for (int g : w) t = t * images.at(static_cast<size_t>(g));
        r += t;
    }
    return r;
}

} // namespace voaforge

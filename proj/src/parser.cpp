#include "voaforge/parser.hpp"

#include <cctype>

namespace voaforge {

ParseError::ParseError(const std::string& msg, int l, int c, std::string tok)
    : MathError(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c) +
                (tok.empty() ? std::string(" (end of input)") : " near '" + tok + "'")),
      line(l), column(c), token(std::move(tok)) {}

namespace {

class Parser {
  public:
    Parser(const std::string& text, SpacePtr space) : s_(text), space_(std::move(space)) {}

    FockState state() {
        FockState out(space_);
        skip();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
        }
        out += Rat(sign) * term();
        for (;;) {
            skip();
            if (peek() != '+' && peek() != '-') break;
            sign = peek() == '-' ? -1 : 1;
            ++i_;
            out += Rat(sign) * term();
        }
        return out;
    }

    RatVec vector() {
        RatVec v = space_->zero();
        skip();
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++i_;
                skip();
            } else if (!first) {
                break;
            }
            first = false;
            Rat c(sign);
            bool have_num = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c *= rational();
                have_num = true;
                skip();
                if (peek() == '*') {
                    ++i_;
                    skip();
                } else if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '(') {
                    if (c.is_zero()) continue;
                    fail("a vector term needs a generator");
                }
            }
            RatVec tv;
            if (peek() == '(') {
                ++i_;
                tv = vector();
                expect(')');
            } else {
                const int at = i_;
                std::string name = ident();
                if (name.empty()) {
                    if (have_num && c.is_zero()) continue;
                    fail("expected a generator name");
                }
                extend_alias(name);
                tv = named(name, at);
            }
            skip();
            if (peek() == '/') {
                ++i_;
                skip();
                Rat d = rational();
                if (d.is_zero()) fail("division by zero");
                c /= d;
            }
            for (size_t k = 0; k < v.size(); ++k) v[k] += c * tv[k];
        }
        return v;
    }

    void finish() {
        skip();
        if (i_ < static_cast<int>(s_.size())) fail("unexpected input");
    }

  private:
    char peek() const { return i_ < static_cast<int>(s_.size()) ? s_[static_cast<size_t>(i_)] : '\0'; }

    void skip() {
        while (i_ < static_cast<int>(s_.size()) && std::isspace(static_cast<unsigned char>(s_[static_cast<size_t>(i_)])))
            ++i_;
    }

    std::string token_at(int pos) const {
        if (pos >= static_cast<int>(s_.size())) return {};
        size_t b = static_cast<size_t>(pos), e = b;
        if (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_') {
            while (e < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_')) ++e;
        } else {
            ++e;
        }
        return s_.substr(b, e - b);
    }

    [[noreturn]] void fail(const std::string& msg, int pos = -1) const {
        if (pos < 0) pos = i_;
        int line = 1, col = 1;
        for (int k = 0; k < pos && k < static_cast<int>(s_.size()); ++k) {
            if (s_[static_cast<size_t>(k)] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("syntax error: " + msg, line, col, token_at(pos));
    }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }

    std::string ident() {
        std::string out;
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') return out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') out += s_[static_cast<size_t>(i_++)];
        return out;
    }

    Rat rational() {
        std::string num;
        while (std::isdigit(static_cast<unsigned char>(peek()))) num += s_[static_cast<size_t>(i_++)];
        if (num.empty()) fail("expected a number");
        if (peek() == '/' && i_ + 1 < static_cast<int>(s_.size()) &&
            std::isdigit(static_cast<unsigned char>(s_[static_cast<size_t>(i_ + 1)]))) {
            ++i_;
            std::string den;
            while (std::isdigit(static_cast<unsigned char>(peek()))) den += s_[static_cast<size_t>(i_++)];
            if (den.find_first_not_of('0') == std::string::npos) fail("division by zero");
            return Rat::parse(num + "/" + den);
        }
        return Rat::parse(num);
    }

    long integer() {
        skip();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
        }
        std::string num;
        while (std::isdigit(static_cast<unsigned char>(peek()))) num += s_[static_cast<size_t>(i_++)];
        if (num.empty() || num.size() > 9) fail("expected a mode index");
        return sign * std::stol(num);
    }

    // Aliases such as "sqrtp*alpha" span several identifiers.
    void extend_alias(std::string& name) {
        if ((peek() != '*' && peek() != '/') || space_->has(name) || space_->alias(name)) return;
        const int save = i_;
        const char op = s_[static_cast<size_t>(i_++)];
        std::string rest = ident();
        if (rest.empty()) i_ = save;
        else name += op + rest;
    }

    RatVec named(const std::string& name, int at) const {
        if (const RatVec* a = space_->alias(name)) return *a;
        if (!space_->has(name)) {
            int line = 1, col = 1;
            for (int k = 0; k < at; ++k) {
                if (s_[static_cast<size_t>(k)] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            throw ParseError("unknown generator " + name, line, col, name);
        }
        return space_->unit(space_->index(name));
    }

    bool factor_start() {
        skip();
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    // A parsed factor as an operator on states.
    struct Factor {
        enum Kind { Mode, Field } kind;
        RatVec vec;
        long n = 0;
        FockState field;
    };

    Factor factor() {
        skip();
        if (peek() == '(') {
            ++i_;
            FockState inner = state();
            expect(')');
            return Factor{Factor::Field, {}, 0, inner};
        }
        const int at = i_;
        std::string name = ident();
        if (name.empty()) fail("expected a factor");
        extend_alias(name);
        if (name == "e" && peek() == '^') {
            ++i_;
            expect('{');
            RatVec v = vector();
            expect('}');
            return Factor{Factor::Field, {}, 0, FockState::exp(space_, v)};
        }
        skip();
        if (name == "T" && peek() == '(' && !space_->has("T")) {
            ++i_;
            FockState inner = state();
            expect(')');
            return Factor{Factor::Field, {}, 0, translate(inner)};
        }
        RatVec g = named(name, at);
        expect('[');
        long n = integer();
        expect(']');
        return Factor{Factor::Mode, g, n, {}};
    }

    FockState term() {
        skip();
        Rat c(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = rational();
            skip();
            if (peek() == '*') ++i_;
        }
        std::vector<Factor> fs;
        while (factor_start()) fs.push_back(factor());
        FockState s = FockState::vacuum(space_);
        for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
            if (it->kind == Factor::Mode) s = mode_act(it->vec, static_cast<int>(it->n), s);
            else s = nth_product(it->field, -1, s);
        }
        return c * s;
    }

    const std::string& s_;
    SpacePtr space_;
    int i_ = 0;
};

} // namespace

FockState parse_expr(const std::string& input, SpacePtr space, bool requireLattice) {
    Parser p(input, space);
    FockState s = p.state();
    p.finish();
    if (requireLattice && !space->lattice_basis().empty()) {
        for (const auto& [m, c] : s.terms())
            if (!space->lattice_coords(m.mom))
                throw MathError("non-lattice momentum " + space->vec_str(m.mom) + " in " + space->label());
    }
    return s;
}

RatVec parse_vector(const std::string& input, const SpacePtr& space) {
    Parser p(input, space);
    RatVec v = p.vector();
    p.finish();
    return v;
}

std::string print_state(const FockState& s) { return s.str(); }

json state_json(const FockState& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms()) {
        json mom = json::array();
        for (const auto& x : m.mom) mom.push_back(x.json());
        json modes = json::array();
        for (const auto& md : m.modes) modes.push_back({s.space()->names()[static_cast<size_t>(md.gen)], -md.depth});
        terms.push_back({{"coeff", c.json()}, {"momentum", mom}, {"modes", modes}});
    }
    return {{"space", s.space() ? s.space()->label() : ""}, {"text", s.str()}, {"terms", terms}};
}

} // namespace voaforge

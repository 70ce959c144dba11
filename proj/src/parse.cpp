#include "birsphere/parse.hpp"

#include <cctype>

namespace bs {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RatFn parse_all() {
        RatFn r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'z' || c == 's' || c == '(';
    }

    RatFn expr() {
        RatFn r = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r = r + term();
            } else if (peek('-')) {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    RatFn term() {
        RatFn r = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r = r * unary();
            } else if (peek('/')) {
                ++pos_;
                RatFn d = unary();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else if (starts_atom()) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    RatFn unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    RatFn power() {
        RatFn base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected integer exponent");
        int e = std::stoi(s_.substr(st, pos_ - st));
        RatFn r(1);
        for (int k = 0; k < e; ++k) r = r * base;
        if (neg) {
            if (r.is_zero()) fail("negative power of zero");
            r = RatFn(1) / r;
        }
        return r;
    }

    RatFn atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFn(CoeffScalar(Q(Z(s_.substr(st, pos_ - st)))));
        }
        if (c == '(') {
            ++pos_;
            RatFn r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (s_.compare(pos_, 5, "sqrt(") == 0) {
            pos_ += 5;
            RatFn r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            if (!r.is_constant() || !r.num().coeff(0).is_rational()) fail("sqrt argument must be a rational constant");
            Q q = r.num().coeff(0).re.rational_value();
            if (sgn(q) < 0) fail("sqrt of a negative rational");
            return RatFn(CoeffScalar(TowerReal::sqrt_of(q)));
        }
        if (c == 'i') {
            ++pos_;
            return RatFn(CoeffScalar::I());
        }
        if (c == 'z') {
            ++pos_;
            return RatFn(PolyC::z());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

// Split on top-level commas.
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string strip_brackets(const std::string& s, char open, char close) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != open || t.back() != close)
        throw ParseError("expected " + std::string(1, open) + "..." + std::string(1, close) + " in '" + s + "'");
    return t.substr(1, t.size() - 2);
}

}  // namespace

RatFn parse_ratfn(const std::string& s) {
    if (trim(s).empty()) throw ParseError("empty expression");
    return Parser(s).parse_all();
}

PolyC parse_poly(const std::string& s) {
    RatFn r = parse_ratfn(s);
    if (!r.is_polynomial()) throw ParseError("'" + s + "' is not a polynomial");
    return r.num();
}

CoeffScalar parse_scalar(const std::string& s) {
    RatFn r = parse_ratfn(s);
    if (!r.is_constant()) throw ParseError("'" + s + "' is not a constant");
    return r.num().coeff(0);
}

std::array<PolyC, 4> parse_matrix_entries(const std::string& s0) {
    std::string s = trim(s0);
    std::vector<RatFn> e;
    if (s.rfind("diag(", 0) == 0) {
        auto args = split_args(strip_brackets(s.substr(4), '(', ')'));
        if (args.size() != 2) throw ParseError("diag takes two entries");
        e = {parse_ratfn(args[0]), RatFn(), RatFn(), parse_ratfn(args[1])};
    } else {
        auto rows = split_args(strip_brackets(s, '[', ']'));
        if (rows.size() != 2) throw ParseError("matrix needs two rows in '" + s + "'");
        for (const auto& row : rows) {
            auto cols = split_args(strip_brackets(row, '[', ']'));
            if (cols.size() != 2) throw ParseError("matrix row needs two entries in '" + row + "'");
            for (const auto& c : cols) e.push_back(parse_ratfn(c));
        }
    }
    PolyC l(CoeffScalar(1));
    for (const auto& x : e) {
        if (x.is_zero()) continue;
        l = (l * x.den()).exact_div(gcd(l, x.den()));
    }
    std::array<PolyC, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = e[k].num() * l.exact_div(e[k].den());
    return out;
}

}  // namespace bs

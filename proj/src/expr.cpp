#include "cotop/expr.hpp"

#include "cotop/golomb.hpp"
#include "cotop/topology.hpp"

#include <cctype>
#include <numeric>
#include <optional>

namespace cotop::expr {

namespace {

enum class Tok { Ident, Int, LParen, RParen, LBrace, RBrace, Comma, Tilde, Amp, Pipe, Backslash, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string_view text;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + std::string(t.text) + "'";
}

const std::vector<std::string> kAtomStart = {"N", "N1", "sigma", "M", "class", "ap", "{", "(", "~"};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    std::shared_ptr<const Node> parse() {
        auto root = parse_union();
        if (cur_.kind != Tok::End) syntax({"&", "\\", "|", "end of input"});
        return root;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    Token cur_{Tok::End, 0, {}};

    [[noreturn]] void syntax(std::vector<std::string> expected) const {
        std::string msg = "syntax error at byte " + std::to_string(cur_.offset) + ": unexpected " +
                          describe(cur_) + ", expected one of:";
        for (const auto& e : expected) msg += " " + e;
        throw ParseError(ErrorKind::Parse, cur_.offset, std::move(expected), msg);
    }

    [[noreturn]] void semantic(std::size_t offset, const std::string& why) const {
        throw ParseError(ErrorKind::Semantic, offset, {},
                         "semantic error at byte " + std::to_string(offset) + ": " + why);
    }

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, start, {}};
            return;
        }
        const char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            cur_ = {k, start, src_.substr(start, 1)};
        };
        switch (c) {
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '{': return single(Tok::LBrace);
            case '}': return single(Tok::RBrace);
            case ',': return single(Tok::Comma);
            case '~': return single(Tok::Tilde);
            case '&': return single(Tok::Amp);
            case '|': return single(Tok::Pipe);
            case '\\': return single(Tok::Backslash);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_ = {Tok::Int, start, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            cur_ = {Tok::Ident, start, src_.substr(start, pos_ - start)};
            return;
        }
        cur_ = {Tok::End, start, src_.substr(start, 1)};
        throw ParseError(ErrorKind::Parse, start, kAtomStart,
                         "syntax error at byte " + std::to_string(start) + ": unexpected character '" +
                             std::string(1, c) + "'");
    }

    void expect(Tok kind, const char* spelled) {
        if (cur_.kind != kind) syntax({spelled});
        advance();
    }

    std::pair<u64, std::size_t> integer() {
        if (cur_.kind != Tok::Int) syntax({"integer"});
        const std::size_t at = cur_.offset;
        u64 v = 0;
        for (char d : cur_.text) {
            const u64 digit = static_cast<u64>(d - '0');
            if (v > (arith::kMaxPosInt - digit) / 10) semantic(at, "integer exceeds 2^63-1");
            v = v * 10 + digit;
        }
        advance();
        return {v, at};
    }

    static std::shared_ptr<const Node> make(Op op, std::vector<u64> args = {},
                                            std::shared_ptr<const Node> lhs = nullptr,
                                            std::shared_ptr<const Node> rhs = nullptr) {
        return std::make_shared<const Node>(Node{op, std::move(args), std::move(lhs), std::move(rhs)});
    }

    std::shared_ptr<const Node> parse_union() {
        auto lhs = parse_diff();
        while (cur_.kind == Tok::Pipe) {
            advance();
            lhs = make(Op::Union, {}, lhs, parse_diff());
        }
        return lhs;
    }

    std::shared_ptr<const Node> parse_diff() {
        auto lhs = parse_inter();
        while (cur_.kind == Tok::Backslash) {
            advance();
            lhs = make(Op::Difference, {}, lhs, parse_inter());
        }
        return lhs;
    }

    std::shared_ptr<const Node> parse_inter() {
        auto lhs = parse_unary();
        while (cur_.kind == Tok::Amp) {
            advance();
            lhs = make(Op::Intersect, {}, lhs, parse_unary());
        }
        return lhs;
    }

    std::shared_ptr<const Node> parse_unary() {
        if (cur_.kind == Tok::Tilde) {
            advance();
            return make(Op::Complement, {}, parse_unary());
        }
        return parse_atom();
    }

    std::vector<std::pair<u64, std::size_t>> call_args(std::size_t count) {
        expect(Tok::LParen, "(");
        std::vector<std::pair<u64, std::size_t>> out;
        for (std::size_t i = 0; i < count; ++i) {
            if (i) expect(Tok::Comma, ",");
            out.push_back(integer());
        }
        expect(Tok::RParen, ")");
        return out;
    }

    void require_positive(const std::pair<u64, std::size_t>& arg, const std::string& what) {
        if (arg.first == 0) semantic(arg.second, what + " must be >= 1");
    }

    std::shared_ptr<const Node> parse_atom() {
        switch (cur_.kind) {
            case Tok::LParen: {
                advance();
                auto inner = parse_union();
                if (cur_.kind != Tok::RParen) syntax({"&", "\\", "|", ")"});
                advance();
                return inner;
            }
            case Tok::LBrace: {
                advance();
                std::vector<u64> elems;
                for (;;) {
                    const auto v = integer();
                    require_positive(v, "set element");
                    elems.push_back(v.first);
                    if (cur_.kind == Tok::RBrace) break;
                    if (cur_.kind != Tok::Comma) syntax({",", "}"});
                    advance();
                }
                advance();
                return make(Op::Literal, std::move(elems));
            }
            case Tok::Ident: break;
            default: syntax(kAtomStart);
        }
        const std::string_view name = cur_.text;
        const std::size_t at = cur_.offset;
        if (name == "N") {
            advance();
            return make(Op::Naturals);
        }
        if (name == "N1") {
            advance();
            return make(Op::NaturalsFromTwo);
        }
        if (name == "sigma" || name == "M") {
            advance();
            const auto a = call_args(1);
            require_positive(a[0], std::string(name) + " argument");
            return make(name == "sigma" ? Op::Sigma : Op::Multiples, {a[0].first});
        }
        if (name == "class") {
            advance();
            const auto a = call_args(2);
            require_positive(a[1], "class modulus");
            if (a[0].first >= a[1].first) {
                semantic(a[0].second, "class residue " + std::to_string(a[0].first) +
                                          " must be below the modulus " + std::to_string(a[1].first));
            }
            return make(Op::Class, {a[0].first, a[1].first});
        }
        if (name == "ap") {
            advance();
            const auto a = call_args(2);
            require_positive(a[0], "ap start");
            require_positive(a[1], "ap step");
            const u64 g = std::gcd(a[0].first, a[1].first);
            if (g != 1) {
                semantic(at, "ap(a,b) requires gcd(a,b)=1, got gcd(" + std::to_string(a[0].first) + "," +
                                 std::to_string(a[1].first) + ")=" + std::to_string(g));
            }
            return make(Op::Ap, {a[0].first, a[1].first});
        }
        syntax(kAtomStart);
    }
};

bool nodes_equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->op == b->op && a->args == b->args && nodes_equal(a->lhs.get(), b->lhs.get()) &&
           nodes_equal(a->rhs.get(), b->rhs.get());
}

int precedence(Op op) {
    switch (op) {
        case Op::Union: return 1;
        case Op::Difference: return 2;
        case Op::Intersect: return 3;
        case Op::Complement: return 4;
        default: return 5;
    }
}

std::string join_args(const std::vector<u64>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string render_node(const Node& n) {
    auto wrap = [](const Node& child, bool needs) {
        const std::string s = render_node(child);
        return needs ? "(" + s + ")" : s;
    };
    switch (n.op) {
        case Op::Naturals: return "N";
        case Op::NaturalsFromTwo: return "N1";
        case Op::Sigma: return "sigma(" + std::to_string(n.args[0]) + ")";
        case Op::Multiples: return "M(" + std::to_string(n.args[0]) + ")";
        case Op::Class: return "class(" + join_args(n.args) + ")";
        case Op::Ap: return "ap(" + join_args(n.args) + ")";
        case Op::Literal: return "{" + join_args(n.args) + "}";
        case Op::Complement: return "~" + wrap(*n.lhs, precedence(n.lhs->op) < precedence(Op::Complement));
        case Op::Intersect:
        case Op::Difference:
        case Op::Union: {
            const char* sym = n.op == Op::Intersect ? " & " : n.op == Op::Difference ? " \\ " : " | ";
            const int p = precedence(n.op);
            return wrap(*n.lhs, precedence(n.lhs->op) < p) + sym + wrap(*n.rhs, precedence(n.rhs->op) <= p);
        }
    }
    return {};
}

EPSet eval_node(const Node& n) {
    switch (n.op) {
        case Op::Naturals: return EPSet::naturals();
        case Op::NaturalsFromTwo: return EPSet::naturals_from_two();
        case Op::Sigma: return topo::sigma(n.args[0]);
        case Op::Multiples: return EPSet::multiples(n.args[0]);
        case Op::Class: {
            const u64 r[] = {n.args[0]};
            return EPSet::periodic(n.args[1], r);
        }
        case Op::Ap: return golomb::golomb_basic(n.args[0], n.args[1]);
        case Op::Literal: return EPSet::explicit_set(n.args);
        case Op::Complement: return complement(eval_node(*n.lhs));
        case Op::Intersect: return intersect(eval_node(*n.lhs), eval_node(*n.rhs));
        case Op::Difference: return difference(eval_node(*n.lhs), eval_node(*n.rhs));
        case Op::Union: return unite(eval_node(*n.lhs), eval_node(*n.rhs));
    }
    return {};
}

}  // namespace

bool operator==(const SetExpr& a, const SetExpr& b) { return nodes_equal(a.root_.get(), b.root_.get()); }

SetExpr parse_expr(std::string_view text) { return SetExpr(Parser(text).parse()); }

std::string render(const SetExpr& e) { return render_node(e.root()); }

EPSet evaluate(const SetExpr& e) { return eval_node(e.root()); }

}  // namespace cotop::expr

#include "parlat/query.hpp"

#include <cctype>

namespace parlat {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<QueryAst> run() {
        auto ast = parse_leq();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError{pos_, "trailing input after expression", "end of input"};
        return ast;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw ParseError{pos_, std::string("expected '") + c + "'", what};
    }
    bool eat_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t after = pos_ + word.size();
        if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after])))
            return false;  // longer identifier
        pos_ = after;
        return true;
    }

    std::unique_ptr<QueryAst> node(QueryAst::Kind kind, std::size_t begin,
                                   std::unique_ptr<QueryAst> lhs,
                                   std::unique_ptr<QueryAst> rhs = nullptr) {
        auto n = std::make_unique<QueryAst>();
        n->kind = kind;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        n->begin = begin;
        n->end = pos_;
        return n;
    }

    std::unique_ptr<QueryAst> parse_leq() {
        skip_ws();
        const std::size_t begin = pos_;
        auto lhs = parse_join();
        skip_ws();
        if (text_.substr(pos_, 2) == "<=") {
            pos_ += 2;
            auto rhs = parse_join();
            return node(QueryAst::Kind::Leq, begin, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    std::unique_ptr<QueryAst> parse_join() {
        skip_ws();
        const std::size_t begin = pos_;
        auto lhs = parse_meet();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                auto rhs = parse_meet();
                lhs = node(QueryAst::Kind::Join, begin, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<QueryAst> parse_meet() {
        skip_ws();
        const std::size_t begin = pos_;
        auto lhs = parse_postfix();
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                auto rhs = parse_postfix();
                lhs = node(QueryAst::Kind::Meet, begin, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<QueryAst> parse_postfix() {
        skip_ws();
        const std::size_t begin = pos_;
        auto inner = parse_primary();
        while (eat('\''))
            inner = node(QueryAst::Kind::Dual, begin, std::move(inner));
        return inner;
    }

    std::unique_ptr<QueryAst> parse_primary() {
        skip_ws();
        const std::size_t begin = pos_;
        if (eat_word("Mconv")) return parse_call(QueryAst::Kind::Conv, begin);
        if (eat_word("M")) return parse_call(QueryAst::Kind::Mult, begin);
        if (eat_word("dual")) return parse_call(QueryAst::Kind::Dual, begin);
        if (eat_word("Lp")) {
            expect('(', "chain space argument");
            const EnrichedExponent e = parse_exponent_arg(')');
            expect(')', "closing parenthesis");
            auto n = std::make_unique<QueryAst>();
            n->kind = QueryAst::Kind::Atom;
            n->atom = SpacePoint::chain(e);
            n->begin = begin;
            n->end = pos_;
            return n;
        }
        if (eat_word("L") || eat_word("W")) {
            const bool amalgam = text_[begin] == 'W';
            expect('(', "space arguments");
            const EnrichedExponent p = parse_exponent_arg(',');
            expect(',', "second exponent");
            const EnrichedExponent q = parse_exponent_arg(')');
            expect(')', "closing parenthesis");
            auto n = std::make_unique<QueryAst>();
            n->kind = QueryAst::Kind::Atom;
            n->atom = amalgam ? SpacePoint::amalgam(p, q) : SpacePoint::square(p, q);
            n->begin = begin;
            n->end = pos_;
            return n;
        }
        if (eat('(')) {
            auto inner = parse_leq();
            expect(')', "closing parenthesis");
            inner->begin = begin;
            inner->end = pos_;
            return inner;
        }
        throw ParseError{pos_, "expected a space expression",
                         "Lp( L( W( M( Mconv( dual( or ("};
    }

    std::unique_ptr<QueryAst> parse_call(QueryAst::Kind kind, std::size_t begin) {
        expect('(', "argument");
        auto inner = parse_leq();
        expect(')', "closing parenthesis");
        return node(kind, begin, std::move(inner));
    }

    EnrichedExponent parse_exponent_arg(char stop) {
        skip_ws();
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && text_[pos_] != stop && text_[pos_] != ')' &&
               text_[pos_] != ',')
            ++pos_;
        std::string_view slice = text_.substr(begin, pos_ - begin);
        while (!slice.empty() && std::isspace(static_cast<unsigned char>(slice.back())))
            slice.remove_suffix(1);
        const auto e = parse_exponent(slice);
        if (!e)
            throw ParseError{begin, "malformed exponent literal '" + std::string(slice) + "'",
                             "integer, fraction a/b, inf or omega, optional -/+ suffix"};
        return *e;
    }
};

int precedence(QueryAst::Kind k) {
    switch (k) {
        case QueryAst::Kind::Leq: return 0;
        case QueryAst::Kind::Join: return 1;
        case QueryAst::Kind::Meet: return 2;
        default: return 3;
    }
}

void print_node(const QueryAst& ast, std::string& out) {
    switch (ast.kind) {
        case QueryAst::Kind::Atom:
            out += format_space(ast.atom);
            return;
        case QueryAst::Kind::Mult:
        case QueryAst::Kind::Conv:
            out += ast.kind == QueryAst::Kind::Mult ? "M(" : "Mconv(";
            print_node(*ast.lhs, out);
            out += ')';
            return;
        case QueryAst::Kind::Dual: {
            const bool wrap = precedence(ast.lhs->kind) < 3;
            if (wrap) out += '(';
            print_node(*ast.lhs, out);
            if (wrap) out += ')';
            out += '\'';
            return;
        }
        case QueryAst::Kind::Meet:
        case QueryAst::Kind::Join:
        case QueryAst::Kind::Leq: {
            const int prec = precedence(ast.kind);
            const char* op = ast.kind == QueryAst::Kind::Meet
                                 ? " & "
                                 : ast.kind == QueryAst::Kind::Join ? " | " : " <= ";
            const bool wl = precedence(ast.lhs->kind) < prec;
            const bool wr = precedence(ast.rhs->kind) <= prec;
            if (wl) out += '(';
            print_node(*ast.lhs, out);
            if (wl) out += ')';
            out += op;
            if (wr) out += '(';
            print_node(*ast.rhs, out);
            if (wr) out += ')';
            return;
        }
    }
}

SpacePoint expect_space(const QueryAst& where, QueryValue v) {
    if (std::holds_alternative<bool>(v))
        throw EvalError{where.begin, where.end,
                        "subexpression yields a boolean where a space is required"};
    return std::get<SpacePoint>(v);
}

}  // namespace

std::unique_ptr<QueryAst> parse_query(std::string_view text) {
    if (text.size() > 4096) throw ParseError{4096, "input exceeds 4096 bytes", ""};
    return Parser(text).run();
}

std::string print_query(const QueryAst& ast) {
    std::string out;
    print_node(ast, out);
    return out;
}

QueryValue eval_query(const QueryAst& ast, TopMode mode) {
    auto sub = [&](const QueryAst& child) { return expect_space(child, eval_query(child, mode)); };
    try {
        switch (ast.kind) {
            case QueryAst::Kind::Atom: return ast.atom;
            case QueryAst::Kind::Dual: return space_dual(sub(*ast.lhs));
            case QueryAst::Kind::Mult: return mult_multiplier(sub(*ast.lhs), mode);
            case QueryAst::Kind::Conv: return conv_multiplier(sub(*ast.lhs));
            case QueryAst::Kind::Meet: return space_meet(sub(*ast.lhs), sub(*ast.rhs));
            case QueryAst::Kind::Join: return space_join(sub(*ast.lhs), sub(*ast.rhs));
            case QueryAst::Kind::Leq: return space_leq(sub(*ast.lhs), sub(*ast.rhs));
        }
    } catch (const VariantError& e) {
        throw EvalError{ast.begin, ast.end, e.what()};
    }
    throw EvalError{ast.begin, ast.end, "unreachable"};
}

std::string format_query_value(const QueryValue& v) {
    if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
    return format_space(std::get<SpacePoint>(v));
}

}  // namespace parlat

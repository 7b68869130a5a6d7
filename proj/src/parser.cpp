#include "gmlie/parser.hpp"

#include "gmlie/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gmlie {

namespace {

ExprPtr make(Expr e)
{
    return std::make_shared<const Expr>(std::move(e));
}

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LBracket, RBracket, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::string describe(const Token& t)
{
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += 1; // multi-byte operators count as one column
    };
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        const int start_col = col;
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, start_col});
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        // U+00B7 middle dot and U+2212 minus sign
        if (s.substr(i, 2) == "\xC2\xB7") {
            out.push_back({Tok::Star, "\xC2\xB7", line, start_col});
            advance(2);
            continue;
        }
        if (s.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back({Tok::Minus, "\xE2\x88\x92", line, start_col});
            advance(3);
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default: throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", line, start_col);
        }
        out.push_back({kind, std::string(1, s[i]), line, start_col});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, ParseMode mode) : toks_(tokenize(text)), mode_(mode) {}

    ExprPtr parse_all()
    {
        ExprPtr e = expr();
        if (peek().kind != Tok::End)
            fail("unexpected " + describe(peek()));
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept(Tok k)
    {
        if (peek().kind != k)
            return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
    void expect(Tok k, const char* what)
    {
        if (!accept(k))
            fail(std::string("expected ") + what + ", found " + describe(peek()));
    }

    static ExprPtr negate(const ExprPtr& e)
    {
        if (e->kind == Expr::Kind::Number)
            return Expr::number(-e->value);
        if (e->kind == Expr::Kind::ScalarMul)
            return Expr::scalar_mul(-e->value, e->children[0]);
        return Expr::scalar_mul(Rational(-1), e);
    }

    ExprPtr expr()
    {
        std::vector<ExprPtr> terms;
        const bool neg = accept(Tok::Minus);
        ExprPtr first = term();
        terms.push_back(neg ? negate(first) : first);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            ExprPtr t = term();
            terms.push_back(minus ? negate(t) : t);
        }
        return terms.size() == 1 ? terms[0] : Expr::sum(std::move(terms));
    }

    bool starts_primary() const
    {
        const Tok k = peek().kind;
        return k == Tok::Ident || k == Tok::LBracket || k == Tok::LParen;
    }

    ExprPtr term()
    {
        std::vector<ExprPtr> factors{factor()};
        while (true) {
            if (accept(Tok::Star))
                factors.push_back(factor());
            else if (factors.size() == 1 && factors[0]->kind == Expr::Kind::Number && starts_primary())
                factors.push_back(factor());
            else
                break;
        }
        if (factors.size() == 1)
            return factors[0];
        if (factors[0]->kind == Expr::Kind::Number) {
            const Rational q = factors[0]->value;
            factors.erase(factors.begin());
            return Expr::scalar_mul(q, factors.size() == 1 ? factors[0] : Expr::product(std::move(factors)));
        }
        return Expr::product(std::move(factors));
    }

    ExprPtr factor()
    {
        ExprPtr base = primary();
        if (accept(Tok::Caret)) {
            if (peek().kind != Tok::Int)
                fail("expected a nonnegative integer exponent, found " + describe(peek()));
            const Token& tok = next();
            if (tok.text.size() > 4 || std::stoi(tok.text) > 1000)
                throw ParseError("exponent above 1000", tok.line, tok.column);
            return Expr::power(base, std::stoi(tok.text));
        }
        return base;
    }

    ExprPtr primary()
    {
        const Token& tok = peek();
        switch (tok.kind) {
        case Tok::Int: {
            ++pos_;
            Integer num(tok.text);
            Integer den(1);
            if (accept(Tok::Slash)) {
                if (peek().kind != Tok::Int)
                    fail("expected a denominator, found " + describe(peek()));
                den = Integer(next().text);
                if (den == 0)
                    throw ParseError("zero denominator", tok.line, tok.column);
            }
            return Expr::number(make_rational(num, den));
        }
        case Tok::Ident: {
            ++pos_;
            if (mode_ == ParseMode::Poly)
                return Expr::variable(tok.text);
            if (tok.text == "x" || tok.text == "y")
                return Expr::generator(tok.text);
            if (tok.text == "t" || tok.text == "u" || tok.text == "v")
                return Expr::central(tok.text);
            throw ParseError("unknown symbol '" + tok.text + "'", tok.line, tok.column);
        }
        case Tok::LBracket: {
            ++pos_;
            std::vector<ExprPtr> items{expr()};
            while (accept(Tok::Comma))
                items.push_back(expr());
            if (items.size() < 2)
                throw ParseError("a bracket needs at least two entries", tok.line, tok.column);
            expect(Tok::RBracket, "']'");
            return Expr::bracket(std::move(items));
        }
        case Tok::LParen: {
            ++pos_;
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        default: fail("unexpected " + describe(tok));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParseMode mode_;
};

bool is_atom(const ExprPtr& e)
{
    switch (e->kind) {
    case Expr::Kind::Generator:
    case Expr::Kind::CentralVar:
    case Expr::Kind::Variable:
    case Expr::Kind::Bracket: return true;
    case Expr::Kind::Number: return e->value >= 0;
    default: return false;
    }
}

std::string wrap(const ExprPtr& e, bool allow_product)
{
    if (is_atom(e) || e->kind == Expr::Kind::Power || (allow_product && e->kind == Expr::Kind::Product))
        return print(e);
    return "(" + print(e) + ")";
}

std::string wrap_base(const ExprPtr& e)
{
    const bool integer = e->kind == Expr::Kind::Number && e->value >= 0 && e->value.get_den() == 1;
    if (integer || (is_atom(e) && e->kind != Expr::Kind::Number))
        return print(e);
    return "(" + print(e) + ")";
}

// negative numbers and scalar multiples become " - ..." inside sums
std::string print_term_tail(const ExprPtr& e)
{
    if (e->kind == Expr::Kind::Number && e->value < 0)
        return " - " + to_string(-e->value);
    if (e->kind == Expr::Kind::ScalarMul && e->value < 0) {
        if (e->value == -1)
            return " - " + wrap(e->children[0], true);
        return " - " + to_string(-e->value) + "*" + wrap(e->children[0], true);
    }
    return " + " + print(e);
}

void collect_names(const ExprPtr& e, std::set<std::string>& out)
{
    if (e->kind == Expr::Kind::Variable)
        out.insert(e->name);
    for (const ExprPtr& c : e->children)
        collect_names(c, out);
}

} // namespace

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line), column_(column)
{
}

ExprPtr Expr::generator(std::string n)
{
    return make({Kind::Generator, std::move(n), Rational(0), 0, {}});
}

ExprPtr Expr::central(std::string n)
{
    return make({Kind::CentralVar, std::move(n), Rational(0), 0, {}});
}

ExprPtr Expr::variable(std::string n)
{
    return make({Kind::Variable, std::move(n), Rational(0), 0, {}});
}

ExprPtr Expr::number(Rational q)
{
    return make({Kind::Number, "", std::move(q), 0, {}});
}

ExprPtr Expr::sum(std::vector<ExprPtr> terms)
{
    return make({Kind::Sum, "", Rational(0), 0, std::move(terms)});
}

ExprPtr Expr::scalar_mul(Rational q, ExprPtr e)
{
    return make({Kind::ScalarMul, "", std::move(q), 0, {std::move(e)}});
}

ExprPtr Expr::bracket(std::vector<ExprPtr> items)
{
    if (items.size() < 2)
        throw UsageError("a bracket needs at least two entries");
    return make({Kind::Bracket, "", Rational(0), 0, std::move(items)});
}

ExprPtr Expr::product(std::vector<ExprPtr> factors)
{
    if (factors.size() < 2)
        throw UsageError("a product needs at least two factors");
    return make({Kind::Product, "", Rational(0), 0, std::move(factors)});
}

ExprPtr Expr::power(ExprPtr base, int n)
{
    if (n < 0)
        throw UsageError("negative exponent");
    return make({Kind::Power, "", Rational(0), n, {std::move(base)}});
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.name != b.name || a.value != b.value || a.exponent != b.exponent ||
        a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!(*a.children[i] == *b.children[i]))
            return false;
    return true;
}

ExprPtr parse(std::string_view text, ParseMode mode)
{
    return Parser(text, mode).parse_all();
}

std::string print(const ExprPtr& e)
{
    switch (e->kind) {
    case Expr::Kind::Generator:
    case Expr::Kind::CentralVar:
    case Expr::Kind::Variable: return e->name;
    case Expr::Kind::Number: return to_string(e->value);
    case Expr::Kind::Sum: {
        std::string out = print(e->children[0]);
        for (std::size_t i = 1; i < e->children.size(); ++i)
            out += print_term_tail(e->children[i]);
        return out;
    }
    case Expr::Kind::ScalarMul: {
        const ExprPtr& f = e->children[0];
        if (e->value == -1)
            return "-" + wrap(f, true);
        if (e->value < 0)
            return "-" + to_string(-e->value) + "*" + wrap(f, true);
        return to_string(e->value) + "*" + wrap(f, true);
    }
    case Expr::Kind::Bracket: {
        std::string out = "[";
        for (std::size_t i = 0; i < e->children.size(); ++i)
            out += (i ? "," : "") + print(e->children[i]);
        return out + "]";
    }
    case Expr::Kind::Product: {
        std::string out;
        for (std::size_t i = 0; i < e->children.size(); ++i)
            out += (i ? "*" : "") + wrap(e->children[i], false);
        return out;
    }
    case Expr::Kind::Power: return wrap_base(e->children[0]) + "^" + std::to_string(e->exponent);
    }
    return "";
}

WElement eval_w(const ExprPtr& e, int order)
{
    switch (e->kind) {
    case Expr::Kind::Generator: return e->name == "x" ? WElement::x(order) : WElement::y(order);
    case Expr::Kind::CentralVar: return WElement::central(Poly::variable(central_vars(), e->name), order);
    case Expr::Kind::Variable: throw UsageError("unknown symbol '" + e->name + "'");
    case Expr::Kind::Number: return WElement::central(Poly(central_vars(), e->value), order);
    case Expr::Kind::Sum: {
        WElement out(order);
        for (const ExprPtr& c : e->children)
            out += eval_w(c, order);
        return out;
    }
    case Expr::Kind::ScalarMul: return e->value * eval_w(e->children[0], order);
    case Expr::Kind::Bracket: {
        WElement out = eval_w(e->children[0], order);
        for (std::size_t i = 1; i < e->children.size(); ++i)
            out = w_bracket(out, eval_w(e->children[i], order));
        return out;
    }
    case Expr::Kind::Product: {
        WElement out = eval_w(e->children[0], order);
        for (std::size_t i = 1; i < e->children.size(); ++i)
            out = w_mul(out, eval_w(e->children[i], order));
        return out;
    }
    case Expr::Kind::Power: {
        const WElement base = eval_w(e->children[0], order);
        WElement out = WElement::one(order);
        for (int i = 0; i < e->exponent; ++i) {
            out = w_mul(out, base);
            if (out.is_zero())
                break;
        }
        return out;
    }
    }
    throw UsageError("malformed expression");
}

Poly eval_poly(const ExprPtr& e, const VarSpecPtr& vars)
{
    switch (e->kind) {
    case Expr::Kind::Generator:
    case Expr::Kind::CentralVar:
    case Expr::Kind::Variable:
        if (!vars->index_of(e->name))
            throw UsageError("unknown variable '" + e->name + "'");
        return Poly::variable(vars, e->name);
    case Expr::Kind::Number: return Poly(vars, e->value);
    case Expr::Kind::Sum: {
        Poly out(vars);
        for (const ExprPtr& c : e->children)
            out += eval_poly(c, vars);
        return out;
    }
    case Expr::Kind::ScalarMul: return e->value * eval_poly(e->children[0], vars);
    case Expr::Kind::Bracket: throw UsageError("brackets are not allowed in polynomial expressions");
    case Expr::Kind::Product: {
        Poly out = eval_poly(e->children[0], vars);
        for (std::size_t i = 1; i < e->children.size(); ++i)
            out *= eval_poly(e->children[i], vars);
        return out;
    }
    case Expr::Kind::Power: return eval_poly(e->children[0], vars).pow(static_cast<unsigned>(e->exponent));
    }
    throw UsageError("malformed expression");
}

std::vector<std::string> variable_names(const ExprPtr& e)
{
    std::set<std::string> names;
    collect_names(e, names);
    return {names.begin(), names.end()};
}

} // namespace gmlie

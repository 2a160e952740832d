// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include <algorithm>
#include <cctype>
#include <set>

#include "fx/query.hpp"
#include "fx/schema.hpp"

namespace fx {

namespace {

enum class Tok {
    Keyword,   // SELECT, DISTINCT, WHERE, FILTER, OPTIONAL, UNION, ORDER, BY,
               // ASC, DESC, LIMIT, PREFIX, CONTAINS, REGEX, a
    Var,       // ?name
    IriRef,    // <...>
    PName,     // prefix:local
    String,    // "..."
    Integer,   // digits
    Punct,     // { } ( ) . ; , = != *
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;  // keyword upper-cased; punct verbatim
    int line = 1;
    int col = 1;
};

bool is_var_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_var_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_pname_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (eof()) return t;

        char c = peek();
        if (c == '?') {
            advance();
            if (eof() || !is_var_start(peek())) {
                throw SyntaxError(t.line, t.col, "expected variable name after '?'");
            }
            t.kind = Tok::Var;
            while (!eof() && is_var_char(peek())) t.text.push_back(advance());
            return t;
        }
        if (c == '<') {
            advance();
            while (!eof() && peek() != '>') {
                if (peek() == '\n') throw SyntaxError(t.line, t.col, "newline inside IRI");
                t.text.push_back(advance());
            }
            if (eof()) throw SyntaxError(t.line, t.col, "IRI reference never closes");
            advance();
            t.kind = Tok::IriRef;
            return t;
        }
        if (c == '"') {
            advance();
            bool closed = false;
            while (!eof()) {
                char d = advance();
                if (d == '"') {
                    closed = true;
                    break;
                }
                if (d == '\\') {
                    if (eof()) break;
                    char e = advance();
                    switch (e) {
                        case '"': t.text.push_back('"'); break;
                        case '\\': t.text.push_back('\\'); break;
                        case 'n': t.text.push_back('\n'); break;
                        case 't': t.text.push_back('\t'); break;
                        case 'r': t.text.push_back('\r'); break;
                        default:
                            throw SyntaxError(line_, col_,
                                              std::string("unknown escape \\") + e);
                    }
                } else if (d == '\n') {
                    throw UnterminatedLiteralError(t.line, t.col);
                } else {
                    t.text.push_back(d);
                }
            }
            if (!closed) throw UnterminatedLiteralError(t.line, t.col);
            t.kind = Tok::String;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Integer;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                t.text.push_back(advance());
            }
            return t;
        }
        if (c == '!') {
            advance();
            if (eof() || peek() != '=') {
                throw SyntaxError(t.line, t.col, "expected '=' after '!'");
            }
            advance();
            t.kind = Tok::Punct;
            t.text = "!=";
            return t;
        }
        if (std::string("{}().;,=*").find(c) != std::string::npos) {
            advance();
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
            std::string word;
            while (!eof() && is_pname_char(peek())) word.push_back(advance());
            if (!eof() && peek() == ':') {
                advance();
                t.kind = Tok::PName;
                t.text = word + ":";
                while (!eof() && is_pname_char(peek())) t.text.push_back(advance());
                return t;
            }
            t.kind = Tok::Keyword;
            if (word == "a") {
                t.text = "a";
            } else {
                std::transform(word.begin(), word.end(), word.begin(),
                               [](unsigned char ch) { return std::toupper(ch); });
                t.text = word;
            }
            return t;
        }
        throw SyntaxError(t.line, t.col, std::string("unexpected character '") + c + "'");
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }
};

void collect_vars(const GroupPattern& g, std::set<std::string>& out) {
    for (const auto& t : g.triples) {
        for (const auto* pt : {&t.subject, &t.predicate, &t.object}) {
            if (pt->is_var()) out.insert(pt->var);
        }
    }
    for (const auto& o : g.optionals) collect_vars(o, out);
    for (const auto& [a, b] : g.unions) {
        collect_vars(a, out);
        collect_vars(b, out);
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { shift(); }

    QueryAst parse() {
        while (at_keyword("PREFIX")) parse_prefix();
        expect_keyword("SELECT");
        if (at_keyword("DISTINCT")) {
            ast_.distinct = true;
            shift();
        }
        if (at_punct("*")) {
            ast_.star = true;
            shift();
        } else {
            while (cur_.kind == Tok::Var) {
                ast_.projection.push_back(cur_.text);
                shift();
            }
            if (ast_.projection.empty()) {
                fail("projection: one or more variables or '*'");
            }
        }
        expect_keyword("WHERE");
        ast_.pattern = parse_group();
        if (at_keyword("ORDER")) {
            shift();
            expect_keyword("BY");
            ast_.order_by = parse_order_spec();
        }
        if (at_keyword("LIMIT")) {
            shift();
            if (cur_.kind != Tok::Integer) fail("an integer after LIMIT");
            std::uint64_t n = std::stoull(cur_.text);
            if (n == 0) fail("a positive LIMIT");
            ast_.limit = n;
            shift();
        }
        if (cur_.kind != Tok::End) fail("end of query");
        check_scopes();
        return std::move(ast_);
    }

private:
    Lexer lexer_;
    Token cur_;
    QueryAst ast_;

    void shift() { cur_ = lexer_.next(); }

    bool at_keyword(const char* kw) const {
        return cur_.kind == Tok::Keyword && cur_.text == kw;
    }
    bool at_punct(const char* p) const {
        return cur_.kind == Tok::Punct && cur_.text == p;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
        throw SyntaxError(cur_.line, cur_.col, "expected " + expected + ", got " + got);
    }

    void expect_keyword(const char* kw) {
        if (!at_keyword(kw)) fail(std::string("'") + kw + "'");
        shift();
    }
    void expect_punct(const char* p) {
        if (!at_punct(p)) fail(std::string("'") + p + "'");
        shift();
    }

    void parse_prefix() {
        shift();  // PREFIX
        if (cur_.kind != Tok::PName || cur_.text.find(':') != cur_.text.size() - 1) {
            fail("a prefix declaration like 'fx:'");
        }
        std::string name = cur_.text.substr(0, cur_.text.size() - 1);
        shift();
        if (cur_.kind != Tok::IriRef) fail("an IRI in angle brackets");
        ast_.prefixes[name] = cur_.text;
        shift();
    }

    Term resolve_pname(const Token& t) const {
        auto colon = t.text.find(':');
        std::string prefix = t.text.substr(0, colon);
        std::string local = t.text.substr(colon + 1);
        auto it = ast_.prefixes.find(prefix);
        if (it == ast_.prefixes.end()) {
            throw UnknownPrefixError(t.line, t.col, prefix);
        }
        try {
            return Term::iri(it->second + local);
        } catch (const MalformedIri& e) {
            throw SyntaxError(t.line, t.col, e.what());
        }
    }

    PatternTerm parse_pattern_term(bool allow_literal) {
        switch (cur_.kind) {
            case Tok::Var: {
                PatternTerm v = PatternTerm::variable(cur_.text);
                shift();
                return v;
            }
            case Tok::IriRef: {
                Token t = cur_;
                shift();
                try {
                    return PatternTerm::bound(Term::iri(t.text));
                } catch (const MalformedIri& e) {
                    throw SyntaxError(t.line, t.col, e.what());
                }
            }
            case Tok::PName: {
                Token t = cur_;
                shift();
                return PatternTerm::bound(resolve_pname(t));
            }
            case Tok::String: {
                if (!allow_literal) fail("a variable or IRI");
                PatternTerm lit = PatternTerm::bound(Term::literal(cur_.text));
                shift();
                return lit;
            }
            case Tok::Keyword:
                if (cur_.text == "a") {
                    shift();
                    return PatternTerm::bound(Term::iri(vocab::kRdfType));
                }
                [[fallthrough]];
            default:
                fail("a variable, IRI, or literal");
        }
    }

    GroupPattern parse_group() {
        expect_punct("{");
        GroupPattern g;
        while (!at_punct("}")) {
            if (cur_.kind == Tok::End) fail("'}'");
            if (at_keyword("FILTER")) {
                shift();
                expect_punct("(");
                g.filters.push_back(parse_filter());
                expect_punct(")");
                skip_optional_dot();
                continue;
            }
            if (at_keyword("OPTIONAL")) {
                shift();
                g.optionals.push_back(parse_group());
                skip_optional_dot();
                continue;
            }
            if (at_punct("{")) {
                GroupPattern left = parse_group();
                expect_keyword("UNION");
                GroupPattern right = parse_group();
                while (at_keyword("UNION")) {
                    shift();
                    GroupPattern folded;
                    folded.unions.emplace_back(std::move(left), std::move(right));
                    left = std::move(folded);
                    right = parse_group();
                }
                g.unions.emplace_back(std::move(left), std::move(right));
                skip_optional_dot();
                continue;
            }
            parse_triples_block(g);
        }
        shift();  // '}'
        return g;
    }

    // SPARQL allows a '.' after FILTER / OPTIONAL / group elements.
    void skip_optional_dot() {
        if (at_punct(".")) shift();
    }

    void parse_triples_block(GroupPattern& g) {
        PatternTerm subject = parse_pattern_term(false);
        while (true) {
            PatternTerm predicate = parse_pattern_term(false);
            while (true) {
                PatternTerm object = parse_pattern_term(true);
                g.triples.push_back({subject, predicate, object});
                if (at_punct(",")) {
                    shift();
                    continue;
                }
                break;
            }
            if (at_punct(";")) {
                shift();
                if (at_punct(".") || at_punct("}")) break;  // trailing ';'
                continue;
            }
            break;
        }
        if (at_punct(".")) {
            shift();
        } else if (!at_punct("}") && !at_keyword("FILTER") && !at_keyword("OPTIONAL") &&
                   !at_punct("{")) {
            fail("'.' ending the triple pattern");
        }
    }

    FilterExpr parse_filter() {
        FilterExpr f;
        if (at_keyword("CONTAINS") || at_keyword("REGEX")) {
            f.op = at_keyword("CONTAINS") ? FilterOp::Contains : FilterOp::Regex;
            shift();
            expect_punct("(");
            if (cur_.kind != Tok::Var) fail("a variable as the first argument");
            f.left_var = cur_.text;
            shift();
            expect_punct(",");
            if (cur_.kind == Tok::String) {
                f.right_term = Term::literal(cur_.text);
                shift();
            } else if (cur_.kind == Tok::Var) {
                f.right_var = cur_.text;
                shift();
            } else {
                fail("a string or variable as the second argument");
            }
            expect_punct(")");
            return f;
        }
        if (cur_.kind != Tok::Var) fail("a variable on the left of a comparison");
        f.left_var = cur_.text;
        shift();
        if (at_punct("=")) {
            f.op = FilterOp::Eq;
        } else if (at_punct("!=")) {
            f.op = FilterOp::Neq;
        } else {
            fail("'=' or '!='");
        }
        shift();
        switch (cur_.kind) {
            case Tok::Var:
                f.right_var = cur_.text;
                break;
            case Tok::String:
                f.right_term = Term::literal(cur_.text);
                break;
            case Tok::IriRef:
                f.right_term = Term::iri(cur_.text);
                break;
            case Tok::PName:
                f.right_term = resolve_pname(cur_);
                break;
            default:
                fail("a variable, literal, or IRI on the right of a comparison");
        }
        shift();
        return f;
    }

    OrderBy parse_order_spec() {
        OrderBy ob;
        if (at_keyword("ASC") || at_keyword("DESC")) {
            ob.direction = at_keyword("ASC") ? SortDirection::Asc : SortDirection::Desc;
            shift();
            expect_punct("(");
            if (cur_.kind != Tok::Var) fail("a variable inside ORDER BY");
            ob.var = cur_.text;
            shift();
            expect_punct(")");
        } else if (cur_.kind == Tok::Var) {
            ob.var = cur_.text;
            shift();
        } else {
            fail("ASC(?v), DESC(?v), or ?v after ORDER BY");
        }
        return ob;
    }

    // Parse-time scope rules: every projected variable appears in some
    // triple pattern; every filter variable is bound by a triple pattern of
    // its own group.
    void check_group_filters(const GroupPattern& g) const {
        std::set<std::string> own;
        for (const auto& t : g.triples) {
            for (const auto* pt : {&t.subject, &t.predicate, &t.object}) {
                if (pt->is_var()) own.insert(pt->var);
            }
        }
        for (const auto& f : g.filters) {
            for (const std::string* v : {&f.left_var, &f.right_var}) {
                if (!v->empty() && !own.count(*v)) {
                    throw ParseError("unbound-filter-variable", 1, 1,
                                     "?" + *v + " is not bound by a triple pattern in its group");
                }
            }
        }
        for (const auto& o : g.optionals) check_group_filters(o);
        for (const auto& [a, b] : g.unions) {
            check_group_filters(a);
            check_group_filters(b);
        }
    }

    void check_scopes() const {
        std::set<std::string> all;
        collect_vars(ast_.pattern, all);
        for (const auto& v : ast_.projection) {
            if (!all.count(v)) {
                throw ParseError("unbound-projection-variable", 1, 1,
                                 "?" + v + " does not appear in the pattern");
            }
        }
        check_group_filters(ast_.pattern);
        if (ast_.order_by) {
            // Ordering happens after projection, so the key must be projected.
            bool projected = ast_.star ||
                             std::count(ast_.projection.begin(), ast_.projection.end(),
                                        ast_.order_by->var) > 0;
            if (!all.count(ast_.order_by->var) || !projected) {
                throw ParseError("unbound-order-variable", 1, 1,
                                 "?" + ast_.order_by->var + " is not a projected variable");
            }
        }
    }
};

void print_term(std::string& out, const PatternTerm& pt) {
    if (pt.is_var()) {
        out += "?" + pt.var;
    } else if (pt.term->is_iri()) {
        out += "<" + pt.term->text() + ">";
    } else {
        out += pt.term->canonical();
    }
}

void print_group(std::string& out, const GroupPattern& g, int indent) {
    std::string pad(indent * 2, ' ');
    out += "{\n";
    for (const auto& t : g.triples) {
        out += pad + "  ";
        print_term(out, t.subject);
        out += " ";
        print_term(out, t.predicate);
        out += " ";
        print_term(out, t.object);
        out += " .\n";
    }
    for (const auto& [a, b] : g.unions) {
        out += pad + "  ";
        print_group(out, a, indent + 1);
        out += " UNION ";
        print_group(out, b, indent + 1);
        out += "\n";
    }
    for (const auto& o : g.optionals) {
        out += pad + "  OPTIONAL ";
        print_group(out, o, indent + 1);
        out += "\n";
    }
    for (const auto& f : g.filters) {
        out += pad + "  FILTER(";
        if (f.op == FilterOp::Contains || f.op == FilterOp::Regex) {
            out += f.op == FilterOp::Contains ? "CONTAINS(?" : "REGEX(?";
            out += f.left_var + ", ";
            if (f.right_term) {
                out += f.right_term->canonical();
            } else {
                out += "?" + f.right_var;
            }
            out += ")";
        } else {
            out += "?" + f.left_var;
            out += f.op == FilterOp::Eq ? " = " : " != ";
            if (f.right_term) {
                if (f.right_term->is_iri()) {
                    out += "<" + f.right_term->text() + ">";
                } else {
                    out += f.right_term->canonical();
                }
            } else {
                out += "?" + f.right_var;
            }
        }
        out += ")\n";
    }
    out += pad + "}";
}

}  // namespace

std::vector<std::string> QueryAst::pattern_variables() const {
    std::set<std::string> all;
    collect_vars(pattern, all);
    return {all.begin(), all.end()};
}

QueryAst parse_query(std::string_view text) { return Parser(text).parse(); }

std::string print_query(const QueryAst& ast) {
    std::string out;
    for (const auto& [prefix, ns] : ast.prefixes) {
        out += "PREFIX " + prefix + ": <" + ns + ">\n";
    }
    out += "SELECT ";
    if (ast.distinct) out += "DISTINCT ";
    if (ast.star) {
        out += "*";
    } else {
        for (size_t i = 0; i < ast.projection.size(); ++i) {
            if (i) out += " ";
            out += "?" + ast.projection[i];
        }
    }
    out += " WHERE ";
    print_group(out, ast.pattern, 0);
    if (ast.order_by) {
        out += ast.order_by->direction == SortDirection::Asc ? "\nORDER BY ASC(?"
                                                             : "\nORDER BY DESC(?";
        out += ast.order_by->var + ")";
    }
    if (ast.limit) {
        out += "\nLIMIT " + std::to_string(*ast.limit);
    }
    out += "\n";
    return out;
}

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/turtle.hpp"

#include <algorithm>
#include <cctype>

#include "fx/schema.hpp"

namespace fx {

namespace {

class TurtleParser {
public:
    TurtleParser(std::string_view text, std::string base)
        : text_(text), base_(std::move(base)) {
        // Tolerate and strip a UTF-8 BOM.
        if (text_.size() >= 3 && text_.substr(0, 3) == "\xEF\xBB\xBF") {
            text_.remove_prefix(3);
        }
        alias_ = base_ + "teachesInProgram";
        canonical_teaches_in_ = base_ + "teachesIn";
    }

    std::vector<Triple> run() {
        std::vector<Triple> out;
        skip_trivia();
        while (!eof()) {
            if (peek() == '@') {
                parse_prefix_directive();
            } else {
                parse_statement(out);
            }
            skip_trivia();
        }
        return out;
    }

private:
    std::string_view text_;
    std::string base_;
    std::string alias_;
    std::string canonical_teaches_in_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::map<std::string, std::string> prefixes_;

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

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = eof() ? "end of input" : "'" + std::string(1, peek()) + "'";
        throw SyntaxError(line_, col_, "expected " + expected + ", got " + got);
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c, const char* what) {
        skip_trivia();
        if (eof() || peek() != c) fail(what);
        advance();
    }

    bool is_name_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    std::string read_name() {
        std::string out;
        while (!eof() && is_name_char(peek())) out.push_back(advance());
        return out;
    }

    void parse_prefix_directive() {
        int line = line_, col = col_;
        std::string keyword;
        advance();  // '@'
        while (!eof() && std::isalpha(static_cast<unsigned char>(peek()))) {
            keyword.push_back(advance());
        }
        if (keyword != "prefix") {
            throw SyntaxError(line, col, "unsupported directive @" + keyword);
        }
        skip_trivia();
        std::string name = read_name();  // may be empty (default prefix)
        expect(':', "':' after prefix name");
        skip_trivia();
        Term ns = parse_iriref();
        prefixes_[name] = ns.text();
        expect('.', "'.' after @prefix directive");
    }

    Term parse_iriref() {
        if (eof() || peek() != '<') fail("'<'");
        int line = line_, col = col_;
        advance();
        std::string iri;
        while (!eof() && peek() != '>') {
            if (peek() == '\n') throw SyntaxError(line, col, "newline inside IRI");
            iri.push_back(advance());
        }
        if (eof()) throw SyntaxError(line, col, "IRI reference never closes");
        advance();  // '>'
        try {
            return Term::iri(iri);
        } catch (const MalformedIri& e) {
            throw SyntaxError(line, col, e.what());
        }
    }

    Term parse_prefixed_name() {
        int line = line_, col = col_;
        std::string prefix = read_name();
        if (eof() || peek() != ':') fail("':' in prefixed name");
        advance();
        std::string local = read_name();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) {
            throw UnknownPrefixError(line, col, prefix);
        }
        try {
            return Term::iri(it->second + local);
        } catch (const MalformedIri& e) {
            throw SyntaxError(line, col, e.what());
        }
    }

    Term parse_literal() {
        int line = line_, col = col_;
        advance();  // opening '"'
        std::string lexical;
        bool closed = false;
        while (!eof()) {
            char c = advance();
            if (c == '"') {
                closed = true;
                break;
            }
            if (c == '\\') {
                if (eof()) break;
                char e = advance();
                switch (e) {
                    case '"': lexical.push_back('"'); break;
                    case '\\': lexical.push_back('\\'); break;
                    case 'n': lexical.push_back('\n'); break;
                    case 't': lexical.push_back('\t'); break;
                    case 'r': lexical.push_back('\r'); break;
                    default:
                        throw SyntaxError(line_, col_, std::string("unknown escape \\") + e);
                }
            } else if (c == '\n') {
                throw UnterminatedLiteralError(line, col);
            } else {
                lexical.push_back(c);
            }
        }
        if (!closed) throw UnterminatedLiteralError(line, col);
        std::string datatype;
        if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == '^') {
            advance();
            advance();
            skip_trivia();
            if (eof()) fail("datatype IRI");
            Term dt = peek() == '<' ? parse_iriref() : parse_prefixed_name();
            datatype = dt.text();
        }
        return Term::literal(std::move(lexical), std::move(datatype));
    }

    Term parse_blank() {
        int line = line_, col = col_;
        advance();  // '_'
        if (eof() || peek() != ':') fail("':' after '_' in blank node");
        advance();
        std::string label = read_name();
        if (label.empty()) throw SyntaxError(line, col, "empty blank node label");
        return Term::blank(label);
    }

    enum class Slot { Subject, Predicate, Object };

    Term parse_term(Slot slot) {
        skip_trivia();
        if (eof()) fail("a term");
        char c = peek();
        if (c == '<') return parse_iriref();
        if (c == '_') {
            if (slot == Slot::Predicate) fail("an IRI predicate");
            return parse_blank();
        }
        if (c == '"') {
            if (slot != Slot::Object) fail("a non-literal term");
            return parse_literal();
        }
        if (slot == Slot::Predicate && c == 'a') {
            // `a` only when it stands alone (not the start of a prefixed name).
            char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : ' ';
            if (!is_name_char(next) && next != ':') {
                advance();
                return Term::iri(vocab::kRdfType);
            }
        }
        if (is_name_char(c) || c == ':') return parse_prefixed_name();
        fail("a term");
    }

    Term normalize_predicate(Term p) {
        if (p.text() == alias_) return Term::iri(canonical_teaches_in_);
        return p;
    }

    void parse_statement(std::vector<Triple>& out) {
        int line = line_, col = col_;
        Term subject = parse_term(Slot::Subject);
        bool first_group = true;
        while (true) {
            skip_trivia();
            if (!first_group && !eof() && peek() == '.') break;  // trailing ';'
            Term predicate = normalize_predicate(parse_term(Slot::Predicate));
            while (true) {
                Term object = parse_term(Slot::Object);
                try {
                    out.emplace_back(subject, predicate, object);
                } catch (const InvalidTriple& e) {
                    throw SyntaxError(line, col, e.what());
                }
                skip_trivia();
                if (!eof() && peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            skip_trivia();
            if (!eof() && peek() == ';') {
                advance();
                first_group = false;
                continue;
            }
            break;
        }
        expect('.', "'.' ending the statement");
    }
};

// Locals that survive prefixed-name syntax in our subset.
bool compactable_local(std::string_view local) {
    if (local.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(local[0])) && local[0] != '_') return false;
    for (char c : local) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
            return false;
        }
    }
    return true;
}

std::string render_iri(const std::string& iri,
                       const std::map<std::string, std::string>& prefixes) {
    if (iri == vocab::kRdfType) return "a";
    for (const auto& [prefix, ns] : prefixes) {
        if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
            std::string_view local(iri.data() + ns.size(), iri.size() - ns.size());
            if (compactable_local(local)) {
                return prefix + ":" + std::string(local);
            }
        }
    }
    return "<" + iri + ">";
}

std::string render_term(const Term& t,
                        const std::map<std::string, std::string>& prefixes) {
    switch (t.kind()) {
        case TermKind::Iri:
            return render_iri(t.text(), prefixes);
        case TermKind::Blank:
            return "_:" + t.text();
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(t.text()) + "\"";
            if (!t.datatype().empty()) {
                out += "^^" + render_iri(t.datatype(), prefixes);
            }
            return out;
        }
    }
    return {};
}

}  // namespace

std::vector<Triple> parse_turtle(std::string_view text, const std::string& base) {
    return TurtleParser(text, base).run();
}

std::string write_turtle(const std::vector<Triple>& triples,
                         const std::map<std::string, std::string>& prefixes) {
    std::string out;
    for (const auto& [prefix, ns] : prefixes) {
        out += "@prefix " + prefix + ": <" + ns + "> .\n";
    }

    // subject -> predicate -> objects, all in canonical term order.
    std::map<Term, std::map<Term, std::set<Term>>> grouped;
    for (const Triple& t : triples) {
        grouped[t.subject][t.predicate].insert(t.object);
    }
    if (!grouped.empty() && !prefixes.empty()) out += "\n";

    for (const auto& [subject, by_predicate] : grouped) {
        std::string stmt = render_term(subject, prefixes);
        bool first_predicate = true;
        for (const auto& [predicate, objects] : by_predicate) {
            if (!first_predicate) stmt += " ;\n   ";
            stmt += " " + render_term(predicate, prefixes);
            bool first_object = true;
            for (const Term& object : objects) {
                stmt += first_object ? " " : ", ";
                stmt += render_term(object, prefixes);
                first_object = false;
            }
            first_predicate = false;
        }
        out += stmt + " .\n";
    }
    return out;
}

}  // namespace fx

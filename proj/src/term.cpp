// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/term.hpp"

#include <cctype>

namespace fx {

namespace {

bool has_whitespace(std::string_view s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) return true;
    }
    return false;
}

bool well_formed_iri(std::string_view s) {
    return !s.empty() && !has_whitespace(s) && s.find(':') != std::string_view::npos;
}

}  // namespace

Term Term::iri(std::string text) {
    if (!well_formed_iri(text)) {
        throw MalformedIri("malformed-iri: \"" + text + "\"");
    }
    return Term(TermKind::Iri, std::move(text), "");
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
    if (!datatype_iri.empty() && !well_formed_iri(datatype_iri)) {
        throw MalformedIri("malformed-iri (literal datatype): \"" + datatype_iri + "\"");
    }
    return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri));
}

Term Term::blank(std::string label) {
    if (label.empty() || has_whitespace(label)) {
        throw std::invalid_argument("blank node label must be non-empty without whitespace");
    }
    return Term(TermKind::Blank, std::move(label), "");
}

std::string Term::local_name() const {
    auto pos = text_.find_last_of("#/");
    if (pos == std::string::npos) {
        pos = text_.find_last_of(':');
    }
    return pos == std::string::npos ? text_ : text_.substr(pos + 1);
}

std::string Term::canonical() const {
    switch (kind_) {
        case TermKind::Iri:
            // An IRI that happens to start with "_:" would collide with the
            // blank-node form; angle brackets keep it distinct.
            if (text_.rfind("_:", 0) == 0) return "<" + text_ + ">";
            return text_;
        case TermKind::Blank:
            return "_:" + text_;
        case TermKind::Literal: {
            std::string out = "\"" + escape_literal(text_) + "\"";
            if (!datatype_.empty()) {
                out += "^^<" + datatype_ + ">";
            }
            return out;
        }
    }
    return {};
}

Term Term::from_canonical(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty canonical term");
    }
    if (text.front() == '"') {
        auto end = text.npos;
        for (size_t i = 1; i < text.size(); ++i) {
            if (text[i] == '\\') {
                ++i;
            } else if (text[i] == '"') {
                end = i;
                break;
            }
        }
        if (end == text.npos) {
            throw std::invalid_argument("unterminated canonical literal");
        }
        std::string lexical = unescape_literal(text.substr(1, end - 1));
        std::string_view rest = text.substr(end + 1);
        if (rest.empty()) {
            return literal(std::move(lexical));
        }
        if (rest.size() >= 4 && rest.substr(0, 3) == "^^<" && rest.back() == '>') {
            return literal(std::move(lexical), std::string(rest.substr(3, rest.size() - 4)));
        }
        throw std::invalid_argument("trailing junk after canonical literal");
    }
    if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
        return iri(std::string(text.substr(1, text.size() - 2)));
    }
    if (text.size() >= 2 && text.substr(0, 2) == "_:") {
        return blank(std::string(text.substr(2)));
    }
    return iri(std::string(text));
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    // Canonical text drives ordering so match results and serializations are
    // stable; kind breaks the rare text collision (e.g. IRI "_:x").
    if (auto c = canonical() <=> other.canonical(); c != 0) return c;
    return static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
}

std::string escape_literal(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape_literal(std::string_view escaped) {
    std::string out;
    out.reserve(escaped.size());
    for (size_t i = 0; i < escaped.size(); ++i) {
        char c = escaped[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        if (i + 1 >= escaped.size()) {
            throw std::invalid_argument("dangling escape in literal");
        }
        switch (escaped[++i]) {
            case '\\': out.push_back('\\'); break;
            case '"': out.push_back('"'); break;
            case 'n': out.push_back('\n'); break;
            case 't': out.push_back('\t'); break;
            case 'r': out.push_back('\r'); break;
            default:
                throw std::invalid_argument("unknown escape in literal");
        }
    }
    return out;
}

Term make_iri(std::string_view ns, std::string_view local) {
    if (ns.empty()) {
        throw MalformedIri("malformed-iri: empty namespace");
    }
    if (local.empty()) {
        throw MalformedIri("malformed-iri: empty local name");
    }
    std::string full;
    full.reserve(ns.size() + local.size());
    full.append(ns).append(local);
    return Term::iri(std::move(full));  // rejects whitespace / missing scheme
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.is_literal()) {
        throw InvalidTriple("invalid-triple: literal in subject position");
    }
    if (!predicate.is_iri()) {
        throw InvalidTriple("invalid-triple: predicate must be an IRI");
    }
}

std::strong_ordering Triple::operator<=>(const Triple& other) const {
    if (auto c = subject <=> other.subject; c != 0) return c;
    if (auto c = predicate <=> other.predicate; c != 0) return c;
    return object <=> other.object;
}

}  // namespace fx

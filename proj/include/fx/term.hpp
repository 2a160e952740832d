// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fx {

// Thrown when an IRI violates the well-formedness rules (non-empty,
// no whitespace, contains a scheme separator).
struct MalformedIri : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a triple would place a literal in subject position or a
// non-IRI in predicate position.
struct InvalidTriple : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class TermKind { Iri, Literal, Blank };

// One graph atom: an IRI, a literal (plain or datatyped), or a blank node.
// Terms are immutable values; equality is exact text comparison.
class Term {
public:
    static Term iri(std::string text);
    static Term literal(std::string lexical, std::string datatype_iri = "");
    static Term blank(std::string label);

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_literal() const { return kind_ == TermKind::Literal; }
    bool is_blank() const { return kind_ == TermKind::Blank; }

    // IRI text, literal lexical form, or blank label depending on kind.
    const std::string& text() const { return text_; }
    // Datatype IRI for typed literals; empty for plain literals and non-literals.
    const std::string& datatype() const { return datatype_; }

    // Local name of an IRI: the part after the last '#' or '/'.
    std::string local_name() const;

    // Unambiguous single-line form: IRIs bare, literals quoted (with
    // optional ^^<datatype>), blank nodes as _:label. Used for
    // deterministic ordering and golden files.
    std::string canonical() const;

    // Inverse of canonical().
    static Term from_canonical(std::string_view text);

    friend bool operator==(const Term&, const Term&) = default;
    std::strong_ordering operator<=>(const Term& other) const;

private:
    Term(TermKind kind, std::string text, std::string datatype)
        : kind_(kind), text_(std::move(text)), datatype_(std::move(datatype)) {}

    TermKind kind_;
    std::string text_;
    std::string datatype_;
};

// Escapes \, ", newline, tab, carriage return for quoted serializations.
std::string escape_literal(std::string_view raw);
// Reverses escape_literal; throws std::invalid_argument on a bad escape.
std::string unescape_literal(std::string_view escaped);

// Concatenates namespace and local name into an IRI term.
// Throws MalformedIri if either part is unusable or the result is not a
// well-formed IRI.
Term make_iri(std::string_view ns, std::string_view local);

// A single (subject, predicate, object) assertion.
// Construction enforces: predicate is an IRI, subject is not a literal.
struct Triple {
    Triple(Term s, Term p, Term o);

    Term subject;
    Term predicate;
    Term object;

    friend bool operator==(const Triple&, const Triple&) = default;
    std::strong_ordering operator<=>(const Triple& other) const;
};

}  // namespace fx

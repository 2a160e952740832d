// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fx/errors.hpp"
#include "fx/term.hpp"

namespace fx {

// Parses the Turtle subset used by this project: @prefix directives,
// <iri> references, prefixed names, the `a` keyword, `;`/`,` continuation,
// quoted string literals (plain or ^^-datatyped), labeled blank nodes and
// `#` comments. A leading UTF-8 BOM is stripped. The predicate alias
// <base>teachesInProgram is normalized to <base>teachesIn.
//
// Triples are returned in document order. Throws SyntaxError,
// UnknownPrefixError or UnterminatedLiteralError with 1-based positions.
std::vector<Triple> parse_turtle(std::string_view text,
                                 const std::string& base = "https://example.org/fx#");

// Deterministic serialization: prefix directives sorted by prefix, subjects
// sorted by canonical text, predicates grouped with `;`, objects joined
// with `,`, rdf:type written as `a`. Byte-identical output for equal
// inputs; parse_turtle(write_turtle(T)) yields exactly T as a set.
std::string write_turtle(const std::vector<Triple>& triples,
                         const std::map<std::string, std::string>& prefixes);

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <string>
#include <vector>

#include "fx/reasoner.hpp"

namespace fx {

enum class Severity { Error, Warning };

struct Finding {
    Severity severity = Severity::Error;
    std::string code;
    Term subject;
    std::string detail;

    friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
    std::vector<Finding> findings;  // sorted by (code, subject, detail)

    int errors() const;
    int warnings() const;
    bool clean() const { return findings.empty(); }

    std::string to_text() const;
    std::string to_json() const;  // stable field names: severity, code, subject, detail
};

// Finding codes, in the order they sort:
//   CARD_MAX           too many values for a bounded property        (error)
//   CARD_MIN           a typed individual misses a required value    (warning)
//   DANGLING_IRI       object-property target with no other trace    (warning)
//   DOMAIN_VIOLATION   subject typed incompatibly with the domain    (error)
//   RANGE_VIOLATION    object incompatible with the range            (error)
//   SUBCLASS_CYCLE     class parent relation has a cycle             (error)
//   UNKNOWN_PREDICATE  predicate not defined by the schema           (warning)
//
// Asserted triples are what get checked; the inferred side of a
// materialized graph contributes evidence only (inverse-filled links for
// cardinality counts and subject positions that rescue referenced
// individuals). Type evidence for domain/range checks is the subclass
// closure of asserted rdf:type statements plus, for schema classes used as
// individuals, the class's own ancestry.
ValidationReport validate(const MaterializedGraph& m, const Schema& schema);

// The asserted-only variant: no inferred evidence at all.
ValidationReport validate_asserted(const Graph& g, const Schema& schema);

}  // namespace fx

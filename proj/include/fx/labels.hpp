// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <string>
#include <vector>

#include "fx/graph.hpp"
#include "fx/schema.hpp"

namespace fx {

// "MScPhysics" -> "MSc Physics", "priya-sharma" -> "Priya Sharma".
std::string humanize_local(std::string_view local);

// Lowercase, spaces to '-', punctuation stripped: "Md. Riaz" -> "md-riaz".
std::string slugify(std::string_view text);

bool ci_equal(std::string_view a, std::string_view b);

// Human-facing name of a term: literals verbatim, schema classes by label,
// individuals by hasName when present, otherwise the humanized local name.
std::string display_label(const Term& t, const Schema& schema, const GraphView& g);

// Schema classes whose label or local name matches `text`
// (case-insensitively). More than one hit means the input was ambiguous.
std::vector<Term> resolve_subject(const std::string& text, const Schema& schema);

// Individuals in the graph matching `text` by hasName, local name,
// humanized local name, or slug. Schema classes are not individuals.
std::vector<Term> resolve_individual(const std::string& text, const Schema& schema,
                                     const GraphView& g);

}  // namespace fx

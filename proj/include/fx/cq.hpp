// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fx/reasoner.hpp"

namespace fx {

// One competency question: a named, parameterized query template. The
// template carries the question text as a comment so the translation from
// prose to query stays auditable. Questions flagged needs_inference are
// evaluated over the materialized graph; the rest run on asserted facts.
struct CompetencyQuestion {
    std::string id;    // "CQ1".."CQ21"
    std::string prose;
    std::string template_text;  // query text with {{placeholder}} slots
    std::map<std::string, std::string> params;  // placeholder -> default snippet
    bool needs_inference = false;
    bool expected_nonempty = true;
    bool describe = false;  // answered by a radius-2 neighborhood, not a SELECT
    std::string note;       // interpretive choices, when any
};

// The 21-question registry, built against the schema's namespace.
std::vector<CompetencyQuestion> competency_questions(const Schema& schema);

// Query text for one question with defaults applied and `overrides`
// substituted. Throws std::invalid_argument for an unknown id
// ("unknown-cq-id") or an override that names no placeholder
// ("bad-parameter").
std::string competency_query(const std::string& id,
                             const std::map<std::string, std::string>& overrides,
                             const Schema& schema);

// The frozen demonstration dataset: the class hierarchy as subclass links
// plus departments, programs and thirteen faculty with names, contacts,
// affiliations, teaching loads and expertise. Deterministic; validates
// clean against the builtin schema.
std::vector<Triple> build_seed_dataset(const Schema& schema);

// Answer for one question as stable JSON: {"id", "vars", "solutions"} for
// SELECT questions, {"id", "center", "radius", "triples"} for the
// neighborhood question. Golden files under fixtures/golden/ hold exactly
// this shape.
std::string cq_answer_json(const CompetencyQuestion& q, const MaterializedGraph& m,
                           const Schema& schema, bool use_inference);

struct CqQuestionResult {
    std::string id;
    std::size_t solutions = 0;
    bool passed = false;
    double elapsed_ms = 0.0;
};

struct CqReport {
    std::vector<CqQuestionResult> questions;

    int passed() const;
    int total() const { return static_cast<int>(questions.size()); }
    double pass_rate() const { return total() ? double(passed()) / total() : 0.0; }

    std::string to_text() const;   // per-question lines with timing
    std::string to_json() const;   // stable across runs: timing omitted
};

// Materializes once, answers all questions (each in its flagged inference
// mode, or all-asserted when disable_inference), and compares against
// golden JSON files named <id>.json under golden_dir.
CqReport run_all(const Graph& g, const Schema& schema, const std::string& golden_dir,
                 bool disable_inference = false);

}  // namespace fx

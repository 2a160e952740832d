// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <string>
#include <vector>

#include "fx/query.hpp"
#include "fx/reasoner.hpp"

namespace fx {

// The canonical expert query for a subject: person, name, department, and
// optionally email. `fx experts` and GET /experts both run exactly this.
std::string experts_query_text(const Schema& schema, const Term& subject);

struct ExpertRecord {
    Term person;
    std::string name;
    std::string department;           // display label
    std::string email;                // empty = none listed
    std::vector<std::string> specializations;  // asserted expertise under the subject
};

std::vector<ExpertRecord> find_experts(const MaterializedGraph& m, const Schema& schema,
                                       const Term& subject, bool use_inference);

// JSON bodies shared verbatim between the CLI (--json) and the HTTP
// service; each ends with a newline.
std::string experts_json(const MaterializedGraph& m, const Schema& schema,
                         const Term& subject, bool use_inference);

struct CollaboratorRecord {
    Term person;
    std::string name;
};

// Asserted collaboratesWith links in either direction, or the derived
// suggestedCollaborator links when `suggested`.
std::vector<CollaboratorRecord> find_collaborators(const MaterializedGraph& m,
                                                   const Schema& schema, const Term& person,
                                                   bool suggested);

std::string collaborators_json(const MaterializedGraph& m, const Schema& schema,
                               const Term& person, bool suggested);

// Everything stated or derived about one individual, each entry flagged
// with its source ("asserted" or the deriving rule).
std::string profile_json(const MaterializedGraph& m, const Schema& schema,
                         const Term& person);

// {"head": [vars...], "results": [{var: canonical-term}...]} for a query
// text; parse and evaluation errors propagate to the caller.
std::string query_json(const MaterializedGraph& m, const std::string& query_text,
                       bool use_inference);

// Solutions as an aligned text table / CSV (RFC-4180 quoting).
std::string solutions_table(const QueryAst& ast, const std::vector<Solution>& solutions);
std::string solutions_csv(const QueryAst& ast, const std::vector<Solution>& solutions);

// RFC-4180 field quoting: quotes only when the value needs it.
std::string csv_field(const std::string& value);

}  // namespace fx

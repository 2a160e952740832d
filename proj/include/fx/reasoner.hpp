// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "fx/graph.hpp"
#include "fx/schema.hpp"

namespace fx {

// Thrown by subclass_closure when the class parent relation has a cycle.
struct CycleDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The closed rule set applied by materialize():
//   R1  type propagation through the subclass hierarchy
//   R2  hasExpertiseIn / teaches propagation to broader subject areas
//   R3  domain/range typing of subjects and objects
//   R4  inverse properties, both directions
//   R5  suggested collaborators from shared subjects or shared programs
enum class Rule { R1 = 1, R2, R3, R4, R5 };

const char* rule_name(Rule r);

// Derived-only predicate emitted by R5; never asserted, never confused
// with collaboratesWith.
inline std::string suggested_collaborator_iri(const Schema& s) {
    return s.resolve("suggestedCollaborator");
}

// Reflexive-transitive closure of the class parent relation as
// (class, ancestor) IRI pairs; (C, C) is included for every class.
// Throws CycleDetected if the parent relation is not a DAG.
std::set<std::pair<std::string, std::string>> subclass_closure(const Schema& schema);

// Asserted facts plus everything the rules derive, kept disjoint, with the
// first rule to derive each triple recorded.
struct MaterializedGraph {
    Graph asserted;
    Graph inferred;
    std::map<Triple, Rule> provenance;  // one entry per inferred triple

    GraphView view(bool use_inference = true) const {
        return GraphView{&asserted, use_inference ? &inferred : nullptr};
    }
};

// Least fixpoint of R1..R5 over the asserted graph. Rules are applied in
// rule order within each round, so when two rules can derive the same
// triple in one round the lowest rule id owns it.
MaterializedGraph materialize(const Graph& asserted, const Schema& schema);

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fx/errors.hpp"
#include "fx/graph.hpp"

namespace fx {

// A pattern slot: a bound term or a variable name.
struct PatternTerm {
    std::optional<Term> term;  // bound when present
    std::string var;           // variable name otherwise, without '?'

    bool is_var() const { return !term.has_value(); }

    static PatternTerm bound(Term t) { return {std::move(t), ""}; }
    static PatternTerm variable(std::string name) { return {std::nullopt, std::move(name)}; }

    friend bool operator==(const PatternTerm&, const PatternTerm&) = default;
};

struct QueryTriplePattern {
    PatternTerm subject, predicate, object;

    friend bool operator==(const QueryTriplePattern&, const QueryTriplePattern&) = default;
};

enum class FilterOp { Eq, Neq, Contains, Regex };

// FILTER(?v = ?w), FILTER(?v != <iri>), FILTER(CONTAINS(?v, "s")),
// FILTER(REGEX(?v, "pat")). Left side is always a variable; the right side
// is a variable or a constant (string literal or IRI).
struct FilterExpr {
    FilterOp op = FilterOp::Eq;
    std::string left_var;
    std::optional<Term> right_term;  // constant when present
    std::string right_var;           // variable otherwise

    friend bool operator==(const FilterExpr&, const FilterExpr&) = default;
};

// A `{ ... }` group: a basic graph pattern plus filters, OPTIONAL groups
// and UNION pairs. Filters see variables bound by this group's own triple
// patterns.
struct GroupPattern {
    std::vector<QueryTriplePattern> triples;
    std::vector<FilterExpr> filters;
    std::vector<GroupPattern> optionals;
    std::vector<std::pair<GroupPattern, GroupPattern>> unions;

    friend bool operator==(const GroupPattern&, const GroupPattern&) = default;
};

enum class SortDirection { Asc, Desc };

struct OrderBy {
    std::string var;
    SortDirection direction = SortDirection::Asc;

    friend bool operator==(const OrderBy&, const OrderBy&) = default;
};

struct QueryAst {
    std::map<std::string, std::string> prefixes;
    bool distinct = false;
    bool star = false;
    std::vector<std::string> projection;  // empty when star
    GroupPattern pattern;
    std::optional<OrderBy> order_by;
    std::optional<std::uint64_t> limit;

    // All variables mentioned in triple patterns, sorted; what `*` projects.
    std::vector<std::string> pattern_variables() const;

    friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

// Parses `PREFIX`* `SELECT [DISTINCT] (?v+ | *) WHERE { ... }` with
// `;`/`,` shorthand, FILTER, OPTIONAL, UNION, then optional
// `ORDER BY [ASC|DESC](?v)` and `LIMIT n`. `a` expands to rdf:type.
// Throws SyntaxError (with 1-based line/column and the expected token),
// UnknownPrefixError, or SyntaxError with kind "unbound-filter-variable"
// when a filter references a variable no triple pattern in its group binds.
QueryAst parse_query(std::string_view text);

// Canonical text form; parse_query(print_query(ast)) == ast.
std::string print_query(const QueryAst& ast);

// One query answer: projected variable -> term. A variable left unbound by
// an OPTIONAL group is simply absent.
struct Solution {
    std::map<std::string, Term> bindings;

    friend bool operator==(const Solution&, const Solution&) = default;
    friend auto operator<=>(const Solution&, const Solution&) = default;
};

// Joins the group's patterns over the view (greedy ordering by static match
// count), applies UNION / OPTIONAL / FILTER per group, projects, dedupes
// under DISTINCT, sorts (bindings in projection order unless ORDER BY), and
// truncates to LIMIT. Throws EvalError when CONTAINS/REGEX hits a bound
// non-literal operand or a regex falls outside the documented dialect.
std::vector<Solution> evaluate(const QueryAst& ast, const GraphView& view);

inline std::vector<Solution> evaluate(const QueryAst& ast, const Graph& g) {
    return evaluate(ast, GraphView{&g, nullptr});
}

}  // namespace fx

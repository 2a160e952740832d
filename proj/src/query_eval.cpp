// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include "fx/query.hpp"

namespace fx {

namespace {

using Bindings = std::map<std::string, Term>;

bool compatible(const Bindings& a, const Bindings& b) {
    for (const auto& [var, term] : b) {
        auto it = a.find(var);
        if (it != a.end() && it->second != term) return false;
    }
    return true;
}

Bindings merged(const Bindings& a, const Bindings& b) {
    Bindings out = a;
    out.insert(b.begin(), b.end());
    return out;
}

// Slot legality when a variable binding flows into a pattern position: a
// literal can never be a subject and only IRIs can be predicates. An
// illegal substitution matches nothing (it is not an error).
bool legal_subject(const Term& t) { return !t.is_literal(); }
bool legal_predicate(const Term& t) { return t.is_iri(); }

std::optional<Term> slot_value(const PatternTerm& pt, const Bindings& b) {
    if (!pt.is_var()) return pt.term;
    auto it = b.find(pt.var);
    if (it != b.end()) return it->second;
    return std::nullopt;
}

// Extends each solution with every triple matching the pattern.
std::vector<Bindings> extend(const std::vector<Bindings>& sols,
                             const QueryTriplePattern& qp, const GraphView& view) {
    std::vector<Bindings> out;
    for (const Bindings& b : sols) {
        auto s = slot_value(qp.subject, b);
        auto p = slot_value(qp.predicate, b);
        auto o = slot_value(qp.object, b);
        if ((s && !legal_subject(*s)) || (p && !legal_predicate(*p))) continue;

        for (const Triple& t : view.match(TriplePattern(s, p, o))) {
            Bindings next = b;
            bool ok = true;
            auto bind = [&](const PatternTerm& pt, const Term& value) {
                if (!pt.is_var()) return;
                auto [it, fresh] = next.emplace(pt.var, value);
                if (!fresh && it->second != value) ok = false;
            };
            bind(qp.subject, t.subject);
            bind(qp.predicate, t.predicate);
            bind(qp.object, t.object);
            if (ok) out.push_back(std::move(next));
        }
    }
    return out;
}

bool ascii_ci_contains(const std::string& hay, const std::string& needle) {
    if (needle.empty()) return true;
    auto lower = [](unsigned char c) { return std::tolower(c); };
    auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end(),
                          [&](char a, char b) { return lower(a) == lower(b); });
    return it != hay.end();
}

// The supported regex dialect: literal characters, `.` `*` `+` `?` `[...]`
// `^` `$` `|`, and backslash escapes of those metacharacters. Groups,
// braces and other escapes are out of dialect.
void check_regex_dialect(const std::string& pattern) {
    for (size_t i = 0; i < pattern.size(); ++i) {
        char c = pattern[i];
        if (c == '\\') {
            if (i + 1 >= pattern.size()) {
                throw EvalError("regex-dialect: dangling backslash");
            }
            char e = pattern[++i];
            if (std::string(".*+?[]^$|\\").find(e) == std::string::npos) {
                throw EvalError(std::string("regex-dialect: unsupported escape \\") + e);
            }
        } else if (c == '(' || c == ')' || c == '{' || c == '}') {
            throw EvalError(std::string("regex-dialect: unsupported character '") + c +
                            "'");
        }
    }
}

bool eval_filter(const FilterExpr& f, const Bindings& b) {
    auto left_it = b.find(f.left_var);
    if (left_it == b.end()) return false;  // unbound operand: filter fails
    const Term& left = left_it->second;

    std::optional<Term> right;
    if (f.right_term) {
        right = *f.right_term;
    } else {
        auto it = b.find(f.right_var);
        if (it == b.end()) return false;
        right = it->second;
    }

    switch (f.op) {
        case FilterOp::Eq:
            return left == *right;
        case FilterOp::Neq:
            return left != *right;
        case FilterOp::Contains:
        case FilterOp::Regex: {
            if (!left.is_literal() || !right->is_literal()) {
                throw EvalError("type-error: CONTAINS/REGEX requires string operands");
            }
            if (f.op == FilterOp::Contains) {
                return ascii_ci_contains(left.text(), right->text());
            }
            check_regex_dialect(right->text());
            std::regex re(right->text());
            return std::regex_search(left.text(), re);
        }
    }
    return false;
}

std::vector<Bindings> eval_group(const GroupPattern& g, const GraphView& view) {
    std::vector<Bindings> sols = {{}};

    // Greedy static join order: cheapest estimated pattern first. Counts
    // ignore current bindings by contract; correctness never depends on the
    // choice.
    std::vector<const QueryTriplePattern*> order;
    order.reserve(g.triples.size());
    for (const auto& t : g.triples) order.push_back(&t);
    std::vector<size_t> cost(g.triples.size());
    for (size_t i = 0; i < g.triples.size(); ++i) {
        const auto& t = g.triples[i];
        auto fixed = [](const PatternTerm& pt) {
            return pt.is_var() ? std::nullopt : pt.term;
        };
        auto s = fixed(t.subject), p = fixed(t.predicate), o = fixed(t.object);
        if ((s && !legal_subject(*s)) || (p && !legal_predicate(*p))) {
            cost[i] = 0;
        } else {
            cost[i] = view.match(TriplePattern(s, p, o)).size();
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](const QueryTriplePattern* a, const QueryTriplePattern* b) {
                         return cost[a - g.triples.data()] < cost[b - g.triples.data()];
                     });

    for (const QueryTriplePattern* qp : order) {
        sols = extend(sols, *qp, view);
        if (sols.empty()) break;
    }

    for (const auto& [left, right] : g.unions) {
        std::vector<Bindings> branch = eval_group(left, view);
        std::vector<Bindings> other = eval_group(right, view);
        branch.insert(branch.end(), other.begin(), other.end());
        std::vector<Bindings> joined;
        for (const Bindings& a : sols) {
            for (const Bindings& u : branch) {
                if (compatible(a, u)) joined.push_back(merged(a, u));
            }
        }
        sols = std::move(joined);
    }

    for (const GroupPattern& opt : g.optionals) {
        std::vector<Bindings> right = eval_group(opt, view);
        std::vector<Bindings> joined;
        for (const Bindings& a : sols) {
            bool extended = false;
            for (const Bindings& r : right) {
                if (compatible(a, r)) {
                    joined.push_back(merged(a, r));
                    extended = true;
                }
            }
            if (!extended) joined.push_back(a);
        }
        sols = std::move(joined);
    }

    for (const FilterExpr& f : g.filters) {
        std::vector<Bindings> kept;
        for (const Bindings& b : sols) {
            if (eval_filter(f, b)) kept.push_back(b);
        }
        sols = std::move(kept);
    }

    return sols;
}

std::string sort_key(const Solution& s, const std::vector<std::string>& vars) {
    std::string key;
    for (const auto& v : vars) {
        auto it = s.bindings.find(v);
        if (it != s.bindings.end()) key += it->second.canonical();
        key.push_back('\x1f');  // unit separator keeps fields from bleeding
    }
    return key;
}

}  // namespace

std::vector<Solution> evaluate(const QueryAst& ast, const GraphView& view) {
    std::vector<Bindings> raw = eval_group(ast.pattern, view);

    std::vector<std::string> projection =
        ast.star ? ast.pattern_variables() : ast.projection;

    std::vector<Solution> sols;
    sols.reserve(raw.size());
    for (const Bindings& b : raw) {
        Solution s;
        for (const auto& v : projection) {
            auto it = b.find(v);
            if (it != b.end()) s.bindings.emplace(v, it->second);
        }
        sols.push_back(std::move(s));
    }

    if (ast.distinct) {
        std::sort(sols.begin(), sols.end());
        sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    }

    auto default_key = [&](const Solution& s) { return sort_key(s, projection); };
    if (ast.order_by) {
        const std::string var = ast.order_by->var;
        const bool asc = ast.order_by->direction == SortDirection::Asc;
        std::sort(sols.begin(), sols.end(), [&](const Solution& a, const Solution& b) {
            auto key = [&](const Solution& s) {
                auto it = s.bindings.find(var);
                return it == s.bindings.end() ? std::string() : it->second.canonical();
            };
            std::string ka = key(a), kb = key(b);
            if (ka != kb) return asc ? ka < kb : ka > kb;
            return default_key(a) < default_key(b);  // deterministic ties
        });
    } else {
        std::sort(sols.begin(), sols.end(), [&](const Solution& a, const Solution& b) {
            return default_key(a) < default_key(b);
        });
    }

    if (ast.limit && sols.size() > *ast.limit) {
        sols.resize(*ast.limit);
    }
    return sols;
}

}  // namespace fx

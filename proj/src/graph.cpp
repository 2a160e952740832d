// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/graph.hpp"

#include <algorithm>
#include <queue>

namespace fx {

TriplePattern::TriplePattern(std::optional<Term> s, std::optional<Term> p,
                             std::optional<Term> o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject && subject->is_literal()) {
        throw InvalidTriple("invalid-pattern: literal in subject position");
    }
    if (predicate && !predicate->is_iri()) {
        throw InvalidTriple("invalid-pattern: bound predicate must be an IRI");
    }
}

bool TriplePattern::matches(const Triple& t) const {
    if (subject && *subject != t.subject) return false;
    if (predicate && *predicate != t.predicate) return false;
    if (object && *object != t.object) return false;
    return true;
}

bool Graph::insert(const Triple& t) {
    auto [it, fresh] = spo_.insert(t);
    if (!fresh) return false;
    pos_.insert(t);
    osp_.insert(t);
    return true;
}

bool Graph::remove(const Triple& t) {
    if (spo_.erase(t) == 0) return false;
    pos_.erase(t);
    osp_.erase(t);
    return true;
}

namespace {

template <typename Set, typename Key>
void collect_range(const Set& index, const Key& key, std::vector<Triple>& out) {
    auto [lo, hi] = index.equal_range(key);
    out.insert(out.end(), lo, hi);
}

void sort_spo(std::vector<Triple>& v) {
    std::sort(v.begin(), v.end());
}

}  // namespace

std::vector<Triple> Graph::match(const TriplePattern& p) const {
    std::vector<Triple> out;
    const bool s = p.subject.has_value();
    const bool pr = p.predicate.has_value();
    const bool o = p.object.has_value();

    if (s && pr && o) {
        Triple t(*p.subject, *p.predicate, *p.object);
        if (contains(t)) out.push_back(t);
    } else if (s && pr) {
        collect_range(spo_, std::make_pair(*p.subject, *p.predicate), out);
    } else if (pr && o) {
        collect_range(pos_, std::make_pair(*p.predicate, *p.object), out);
    } else if (s && o) {
        collect_range(osp_, std::make_pair(*p.object, *p.subject), out);
    } else if (s) {
        collect_range(spo_, *p.subject, out);
    } else if (pr) {
        collect_range(pos_, *p.predicate, out);
    } else if (o) {
        collect_range(osp_, *p.object, out);
    } else {
        out.assign(spo_.begin(), spo_.end());
        return out;  // already in SPO order
    }
    sort_spo(out);
    return out;
}

bool Graph::indexes_consistent() const {
    if (spo_.size() != pos_.size() || spo_.size() != osp_.size()) return false;
    std::set<Triple> a(spo_.begin(), spo_.end());
    std::set<Triple> b(pos_.begin(), pos_.end());
    std::set<Triple> c(osp_.begin(), osp_.end());
    return a == b && b == c;
}

std::vector<Triple> GraphView::match(const TriplePattern& p) const {
    std::vector<Triple> out = asserted ? asserted->match(p) : std::vector<Triple>{};
    if (inferred) {
        std::vector<Triple> extra = inferred->match(p);
        std::vector<Triple> merged;
        merged.reserve(out.size() + extra.size());
        std::merge(out.begin(), out.end(), extra.begin(), extra.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        out = std::move(merged);
    }
    return out;
}

std::vector<Triple> neighborhood(const GraphView& g, const Term& center, int radius) {
    std::set<Triple> seen;
    std::set<Term> frontier{center};
    std::set<Term> visited;

    for (int hop = 0; hop < radius && !frontier.empty(); ++hop) {
        std::set<Term> next;
        for (const Term& node : frontier) {
            if (visited.count(node)) continue;
            visited.insert(node);
            std::vector<Triple> incident;
            if (!node.is_literal()) {
                auto fwd = g.match(TriplePattern(node, std::nullopt, std::nullopt));
                incident.insert(incident.end(), fwd.begin(), fwd.end());
            }
            auto bwd = g.match(TriplePattern(std::nullopt, std::nullopt, node));
            incident.insert(incident.end(), bwd.begin(), bwd.end());
            for (const Triple& t : incident) {
                seen.insert(t);
                for (const Term* end : {&t.subject, &t.object}) {
                    if (!end->is_literal() && !visited.count(*end)) next.insert(*end);
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "fx/term.hpp"

namespace fx {

// A triple template: each position is a bound term or a wildcard (nullopt).
// Bound positions must satisfy the corresponding Triple position rules.
struct TriplePattern {
    TriplePattern(std::optional<Term> s, std::optional<Term> p, std::optional<Term> o);

    std::optional<Term> subject;
    std::optional<Term> predicate;
    std::optional<Term> object;

    bool matches(const Triple& t) const;
};

namespace detail {

// Orders triples by a fixed position permutation so bound prefixes can be
// range-scanned. Transparent: comparable against 1- and 2-term prefixes.
template <int A, int B, int C>
struct PermutedOrder {
    using is_transparent = void;

    static const Term& pos(const Triple& t, int i) {
        switch (i) {
            case 0: return t.subject;
            case 1: return t.predicate;
            default: return t.object;
        }
    }

    bool operator()(const Triple& x, const Triple& y) const {
        if (auto c = pos(x, A) <=> pos(y, A); c != 0) return c < 0;
        if (auto c = pos(x, B) <=> pos(y, B); c != 0) return c < 0;
        return pos(x, C) < pos(y, C);
    }
    bool operator()(const Triple& x, const Term& k) const { return pos(x, A) < k; }
    bool operator()(const Term& k, const Triple& x) const { return k < pos(x, A); }
    bool operator()(const Triple& x, const std::pair<Term, Term>& k) const {
        if (auto c = pos(x, A) <=> k.first; c != 0) return c < 0;
        return pos(x, B) < k.second;
    }
    bool operator()(const std::pair<Term, Term>& k, const Triple& x) const {
        if (auto c = k.first <=> pos(x, A); c != 0) return c < 0;
        return k.second < pos(x, B);
    }
};

}  // namespace detail

// In-memory triple set with subject-, predicate-, and object-first indexes.
// Set semantics: no duplicates. Mutations require exclusive access; any
// number of readers may query an unchanging graph.
class Graph {
public:
    using SpoSet = std::set<Triple, detail::PermutedOrder<0, 1, 2>>;
    using PosSet = std::set<Triple, detail::PermutedOrder<1, 2, 0>>;
    using OspSet = std::set<Triple, detail::PermutedOrder<2, 0, 1>>;

    // Returns true iff the triple was newly added.
    bool insert(const Triple& t);
    // Returns true iff the triple was present.
    bool remove(const Triple& t);
    bool contains(const Triple& t) const { return spo_.count(t) > 0; }
    std::size_t size() const { return spo_.size(); }
    bool empty() const { return spo_.empty(); }

    // All triples matching the pattern, sorted lexicographically by
    // canonical (subject, predicate, object) text. Single- and double-bound
    // patterns are served by index prefix scans.
    std::vector<Triple> match(const TriplePattern& p) const;

    // Subject-ordered view of the whole triple set.
    const SpoSet& triples() const { return spo_; }

    // Cross-index agreement over the full triple set.
    bool indexes_consistent() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.spo_ == b.spo_;
    }

private:
    SpoSet spo_;
    PosSet pos_;
    OspSet osp_;
};

// A read-only view over an asserted graph plus an optional disjoint
// inferred graph; what query evaluation runs against.
struct GraphView {
    const Graph* asserted = nullptr;
    const Graph* inferred = nullptr;  // may be null

    std::vector<Triple> match(const TriplePattern& p) const;
    std::size_t size() const {
        return (asserted ? asserted->size() : 0) + (inferred ? inferred->size() : 0);
    }
    bool contains(const Triple& t) const {
        return (asserted && asserted->contains(t)) || (inferred && inferred->contains(t));
    }
};

// Triples reachable from `center` in at most `radius` hops, where a hop
// connects a node to any triple it appears in (either direction); literals
// terminate expansion. Result is sorted and duplicate-free.
std::vector<Triple> neighborhood(const GraphView& g, const Term& center, int radius);

}  // namespace fx

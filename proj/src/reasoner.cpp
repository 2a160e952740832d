// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/reasoner.hpp"

#include <functional>
#include <vector>

namespace fx {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R4: return "R4";
        case Rule::R5: return "R5";
    }
    return "?";
}

std::set<std::pair<std::string, std::string>> subclass_closure(const Schema& schema) {
    // DFS with an explicit color map; gray-on-gray means a parent cycle.
    enum class Color { White, Gray, Black };
    std::map<std::string, Color> color;
    std::map<std::string, std::set<std::string>> ancestors;

    std::function<void(const std::string&)> visit = [&](const std::string& iri) {
        color[iri] = Color::Gray;
        auto& up = ancestors[iri];
        up.insert(iri);
        const ClassDef* cls = schema.find_class(iri);
        if (cls) {
            for (const auto& parent : cls->parents) {
                if (!schema.has_class(parent)) continue;
                if (color[parent] == Color::Gray) {
                    throw CycleDetected("cycle-detected: subclass cycle through " + parent);
                }
                if (color[parent] == Color::White) visit(parent);
                const auto& pa = ancestors[parent];
                up.insert(pa.begin(), pa.end());
            }
        }
        color[iri] = Color::Black;
    };

    for (const auto& [iri, cls] : schema.classes) {
        if (color[iri] == Color::White) visit(iri);
    }

    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [iri, ups] : ancestors) {
        for (const auto& a : ups) out.emplace(iri, a);
    }
    return out;
}

namespace {

// Strict ancestors per class, precomputed once per materialization.
std::map<std::string, std::set<std::string>> strict_ancestors(const Schema& schema) {
    std::map<std::string, std::set<std::string>> up;
    for (const auto& [cls, anc] : subclass_closure(schema)) {
        if (cls != anc) up[cls].insert(anc);
    }
    return up;
}

}  // namespace

MaterializedGraph materialize(const Graph& asserted, const Schema& schema) {
    MaterializedGraph m;
    m.asserted = asserted;

    const auto up = strict_ancestors(schema);
    const Term rdf_type = Term::iri(vocab::kRdfType);
    const Term expertise = schema.resolve_term("hasExpertiseIn");
    const Term teaches = schema.resolve_term("teaches");
    const Term teaches_in = schema.resolve_term("teachesIn");
    const Term suggested = Term::iri(suggested_collaborator_iri(schema));
    const std::string subject_area = schema.resolve("SubjectArea");

    auto ancestors_of = [&](const Term& cls) -> const std::set<std::string>* {
        if (!cls.is_iri()) return nullptr;
        auto it = up.find(cls.text());
        return it == up.end() ? nullptr : &it->second;
    };

    GraphView whole = m.view(true);

    auto derive = [&](Triple t, Rule rule, bool& changed) {
        if (m.asserted.contains(t) || m.inferred.contains(t)) return;
        m.inferred.insert(t);
        m.provenance.emplace(std::move(t), rule);
        changed = true;
    };

    auto scan = [&](const Term& predicate) {
        return whole.match(TriplePattern(std::nullopt, predicate, std::nullopt));
    };

    bool changed = true;
    while (changed) {
        changed = false;

        // R1: (x type C), C sub D  =>  (x type D)
        for (const Triple& t : scan(rdf_type)) {
            if (const auto* anc = ancestors_of(t.object)) {
                for (const auto& d : *anc) {
                    derive(Triple(t.subject, rdf_type, Term::iri(d)), Rule::R1, changed);
                }
            }
        }

        // R2: expertise and teaching propagate to broader subject areas.
        for (const Term& pred : {expertise, teaches}) {
            for (const Triple& t : scan(pred)) {
                if (const auto* anc = ancestors_of(t.object)) {
                    for (const auto& d : *anc) {
                        derive(Triple(t.subject, pred, Term::iri(d)), Rule::R2, changed);
                    }
                }
            }
        }

        // R3: every use of a schema property types its subject with the
        // domain; object properties also type a non-literal object with the
        // range. Literals never receive range typing.
        for (const auto& [iri, prop] : schema.properties) {
            for (const Triple& t : scan(Term::iri(iri))) {
                derive(Triple(t.subject, rdf_type, Term::iri(prop.domain)), Rule::R3,
                       changed);
                if (prop.kind == PropertyKind::Object && !t.object.is_literal()) {
                    derive(Triple(t.object, rdf_type, Term::iri(prop.range)), Rule::R3,
                           changed);
                }
            }
        }

        // R4: declared inverses hold in both directions.
        for (const auto& [iri, prop] : schema.properties) {
            if (!prop.inverse_of) continue;
            Term inverse = Term::iri(*prop.inverse_of);
            for (const Triple& t : scan(Term::iri(iri))) {
                if (t.object.is_literal()) continue;
                derive(Triple(t.object, inverse, t.subject), Rule::R4, changed);
            }
        }

        // R5: distinct people sharing a proper subject area (anything below
        // SubjectArea itself) or a program are suggested collaborators, both
        // directions. Sharing only SubjectArea/Thing carries no signal and is
        // ignored.
        auto suggest_pairs = [&](const std::vector<Triple>& links) {
            std::map<Term, std::vector<Term>> holders;  // shared object -> people
            for (const Triple& t : links) holders[t.object].push_back(t.subject);
            for (const auto& [obj, people] : holders) {
                for (const Term& a : people) {
                    for (const Term& b : people) {
                        if (a == b) continue;
                        derive(Triple(a, suggested, b), Rule::R5, changed);
                    }
                }
            }
        };
        std::vector<Triple> shared_subjects;
        for (const Triple& t : scan(expertise)) {
            const auto* anc = ancestors_of(t.object);
            const bool proper_subject =
                anc && anc->count(subject_area) > 0;  // strictly below SubjectArea
            if (proper_subject) shared_subjects.push_back(t);
        }
        suggest_pairs(shared_subjects);
        suggest_pairs(scan(teaches_in));
    }

    return m;
}

}  // namespace fx

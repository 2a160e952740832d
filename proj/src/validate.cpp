// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

namespace fx {

int ValidationReport::errors() const {
    return static_cast<int>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity == Severity::Error;
    }));
}

int ValidationReport::warnings() const {
    return static_cast<int>(findings.size()) - errors();
}

std::string ValidationReport::to_text() const {
    if (findings.empty()) return "clean: no findings\n";
    std::string out;
    for (const Finding& f : findings) {
        out += f.severity == Severity::Error ? "error  " : "warning";
        out += "  " + f.code + "  " + f.subject.canonical() + "  " + f.detail + "\n";
    }
    out += std::to_string(errors()) + " error(s), " + std::to_string(warnings()) +
           " warning(s)\n";
    return out;
}

std::string ValidationReport::to_json() const {
    nlohmann::ordered_json j;
    j["errors"] = errors();
    j["warnings"] = warnings();
    j["findings"] = nlohmann::ordered_json::array();
    for (const Finding& f : findings) {
        nlohmann::ordered_json item;
        item["severity"] = f.severity == Severity::Error ? "error" : "warning";
        item["code"] = f.code;
        item["subject"] = f.subject.canonical();
        item["detail"] = f.detail;
        j["findings"].push_back(std::move(item));
    }
    return j.dump(2) + "\n";
}

namespace {

struct Checker {
    const Graph& asserted;
    const Graph* inferred;  // evidence only; may be null
    const Schema& schema;
    std::vector<Finding> findings;

    Term rdf_type = Term::iri(vocab::kRdfType);
    std::string suggested;
    // class -> ancestors including self, cycle-safe
    std::map<std::string, std::set<std::string>> ancestors;

    Checker(const Graph& a, const Graph* i, const Schema& s)
        : asserted(a), inferred(i), schema(s), suggested(suggested_collaborator_iri(s)) {
        compute_ancestors();
    }

    void add(Severity sev, std::string code, Term subject, std::string detail) {
        findings.push_back({sev, std::move(code), std::move(subject), std::move(detail)});
    }

    GraphView evidence_view() const { return GraphView{&asserted, inferred}; }

    // Reachability over parents with a visited set, so a cyclic schema still
    // yields usable (if partial) ancestry for the other checks.
    void compute_ancestors() {
        for (const auto& [iri, cls] : schema.classes) {
            std::set<std::string>& up = ancestors[iri];
            std::vector<std::string> stack{iri};
            while (!stack.empty()) {
                std::string cur = stack.back();
                stack.pop_back();
                if (!up.insert(cur).second) continue;
                if (const ClassDef* c = schema.find_class(cur)) {
                    for (const auto& p : c->parents) stack.push_back(p);
                }
            }
        }
    }

    bool subclass_of(const std::string& cls, const std::string& ancestor) const {
        auto it = ancestors.find(cls);
        return it != ancestors.end() && it->second.count(ancestor) > 0;
    }

    // Two classes conflict when neither subsumes the other.
    bool incompatible(const std::string& a, const std::string& b) const {
        return !subclass_of(a, b) && !subclass_of(b, a);
    }

    bool reserved_predicate(const Term& p) const {
        return p.text() == vocab::kRdfType || p.text() == vocab::kRdfsSubClassOf ||
               p.text() == suggested;
    }

    // Declared types of a term: asserted rdf:type closed over the class
    // hierarchy; a schema class used as an individual counts as its own
    // ancestry. Usage-derived (R3) types are not evidence here: one bad
    // triple must not cascade into unrelated findings.
    std::set<std::string> declared_types(const Term& t) const {
        std::set<std::string> out;
        if (t.is_literal()) return out;
        for (const Triple& ty : asserted.match(TriplePattern(t, rdf_type, std::nullopt))) {
            if (!ty.object.is_iri()) continue;
            auto it = ancestors.find(ty.object.text());
            if (it != ancestors.end()) {
                out.insert(it->second.begin(), it->second.end());
            } else {
                out.insert(ty.object.text());
            }
        }
        if (t.is_iri()) {
            auto it = ancestors.find(t.text());
            if (it != ancestors.end()) out.insert(it->second.begin(), it->second.end());
        }
        return out;
    }

    void check_subclass_cycles() {
        // Gray-path DFS; report each cycle once via its smallest member.
        enum class Color { White, Gray, Black };
        std::map<std::string, Color> color;
        std::set<std::string> in_cycle;
        std::vector<std::string> path;

        std::function<void(const std::string&)> visit = [&](const std::string& iri) {
            color[iri] = Color::Gray;
            path.push_back(iri);
            if (const ClassDef* cls = schema.find_class(iri)) {
                for (const auto& p : cls->parents) {
                    if (!schema.has_class(p)) continue;
                    if (color[p] == Color::Gray) {
                        auto start = std::find(path.begin(), path.end(), p);
                        in_cycle.insert(start, path.end());
                    } else if (color[p] == Color::White) {
                        visit(p);
                    }
                }
            }
            path.pop_back();
            color[iri] = Color::Black;
        };
        for (const auto& [iri, cls] : schema.classes) {
            if (color[iri] == Color::White) visit(iri);
        }
        if (!in_cycle.empty()) {
            add(Severity::Error, "SUBCLASS_CYCLE", Term::iri(*in_cycle.begin()),
                "class parent relation contains a cycle through " +
                    std::to_string(in_cycle.size()) + " class(es)");
        }
    }

    void check_triples() {
        for (const Triple& t : asserted.triples()) {
            if (reserved_predicate(t.predicate)) continue;
            const PropertyDef* prop = schema.find_property(t.predicate.text());
            if (!prop) {
                add(Severity::Warning, "UNKNOWN_PREDICATE", t.subject,
                    "predicate " + t.predicate.text() + " is not defined by the schema");
                continue;
            }
            // Domain side.
            for (const std::string& ty : declared_types(t.subject)) {
                if (incompatible(ty, prop->domain)) {
                    add(Severity::Error, "DOMAIN_VIOLATION", t.subject,
                        "subject of " + prop->label + " is typed " + ty +
                            ", incompatible with domain " + prop->domain);
                    break;
                }
            }
            // Range side.
            if (prop->kind == PropertyKind::Data) {
                bool ok = t.object.is_literal() &&
                          (t.object.datatype().empty() || t.object.datatype() == prop->range);
                if (!ok) {
                    add(Severity::Error, "RANGE_VIOLATION", t.subject,
                        "object of " + prop->label + " must be a " + prop->range +
                            " literal, got " + t.object.canonical());
                }
            } else if (t.object.is_literal()) {
                add(Severity::Error, "RANGE_VIOLATION", t.subject,
                    "object of " + prop->label + " must be an individual, got a literal");
            } else {
                for (const std::string& ty : declared_types(t.object)) {
                    if (incompatible(ty, prop->range)) {
                        add(Severity::Error, "RANGE_VIOLATION", t.subject,
                            "object of " + prop->label + " is typed " + ty +
                                ", incompatible with range " + prop->range);
                        break;
                    }
                }
            }
        }
    }

    void check_cardinality() {
        GraphView view = evidence_view();
        // Distinct objects per (subject, property) over asserted plus
        // inferred links (inverse-filled edges count toward minima).
        for (const auto& [iri, prop] : schema.properties) {
            if (!prop.max_card && prop.min_card == 0) continue;
            Term pred = Term::iri(iri);
            std::map<Term, std::set<Term>> per_subject;
            for (const Triple& t : view.match(TriplePattern(std::nullopt, pred, std::nullopt))) {
                per_subject[t.subject].insert(t.object);
            }
            if (prop.max_card) {
                for (const auto& [subject, objects] : per_subject) {
                    if (objects.size() > *prop.max_card) {
                        add(Severity::Error, "CARD_MAX", subject,
                            prop.label + " has " + std::to_string(objects.size()) +
                                " values, at most " + std::to_string(*prop.max_card) +
                                " allowed");
                    }
                }
            }
            if (prop.min_card > 0) {
                // Only individuals declared to be (a subclass of) the domain
                // owe the minimum.
                std::set<Term> owners;
                for (const Triple& ty :
                     asserted.match(TriplePattern(std::nullopt, rdf_type, std::nullopt))) {
                    if (ty.object.is_iri() && subclass_of(ty.object.text(), prop.domain)) {
                        owners.insert(ty.subject);
                    }
                }
                for (const Term& owner : owners) {
                    size_t n = per_subject.count(owner) ? per_subject[owner].size() : 0;
                    if (n < prop.min_card) {
                        add(Severity::Warning, "CARD_MIN", owner,
                            prop.label + " has " + std::to_string(n) + " value(s), at least " +
                                std::to_string(prop.min_card) + " required");
                    }
                }
            }
        }
    }

    void check_dangling() {
        GraphView view = evidence_view();
        std::set<Term> candidates;
        for (const Triple& t : asserted.triples()) {
            const PropertyDef* prop = schema.find_property(t.predicate.text());
            if (!prop || prop->kind != PropertyKind::Object) continue;
            if (t.object.is_literal()) continue;
            if (t.object.is_iri() && schema.has_class(t.object.text())) continue;
            candidates.insert(t.object);
        }
        for (const Term& c : candidates) {
            bool typed = !asserted.match(TriplePattern(c, rdf_type, std::nullopt)).empty();
            if (typed) continue;
            bool appears_as_subject = false;
            for (const Triple& t : view.match(TriplePattern(c, std::nullopt, std::nullopt))) {
                if (t.predicate.text() != vocab::kRdfType) {
                    appears_as_subject = true;
                    break;
                }
            }
            if (!appears_as_subject) {
                add(Severity::Warning, "DANGLING_IRI", c,
                    "referenced as an object but never described: no type, no outgoing links");
            }
        }
    }

    ValidationReport run() {
        check_subclass_cycles();
        check_triples();
        check_cardinality();
        check_dangling();
        std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
            if (a.code != b.code) return a.code < b.code;
            if (auto c = a.subject <=> b.subject; c != 0) return c < 0;
            return a.detail < b.detail;
        });
        return ValidationReport{std::move(findings)};
    }
};

}  // namespace

ValidationReport validate(const MaterializedGraph& m, const Schema& schema) {
    return Checker(m.asserted, &m.inferred, schema).run();
}

ValidationReport validate_asserted(const Graph& g, const Schema& schema) {
    return Checker(g, nullptr, schema).run();
}

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/lookup.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "fx/labels.hpp"

namespace fx {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> projected_vars(const QueryAst& ast) {
    return ast.star ? ast.pattern_variables() : ast.projection;
}

}  // namespace

std::string experts_query_text(const Schema& schema, const Term& subject) {
    return "PREFIX fx: <" + schema.base + ">\n" +
           "SELECT ?f ?name ?dept ?email WHERE {\n"
           "  ?f fx:hasExpertiseIn <" + subject.text() + "> .\n"
           "  ?f fx:hasName ?name .\n"
           "  ?f fx:belongsToDepartment ?dept .\n"
           "  OPTIONAL { ?f fx:hasEmail ?email . }\n"
           "}\n";
}

std::vector<ExpertRecord> find_experts(const MaterializedGraph& m, const Schema& schema,
                                       const Term& subject, bool use_inference) {
    QueryAst ast = parse_query(experts_query_text(schema, subject));
    std::vector<Solution> rows = evaluate(ast, m.view(use_inference));

    // Narrow subjects under the queried one, for the specialization column.
    std::set<std::string> under;
    for (const auto& [cls, ancestor] : subclass_closure(schema)) {
        if (ancestor == subject.text()) under.insert(cls);
    }
    under.insert(subject.text());

    GraphView display_view = m.view(true);
    Term expertise = schema.resolve_term("hasExpertiseIn");

    std::vector<ExpertRecord> out;
    for (const Solution& row : rows) {
        const Term& person = row.bindings.at("f");
        std::string email;
        if (auto it = row.bindings.find("email"); it != row.bindings.end()) {
            email = it->second.text();
        }
        std::set<std::string> specs;
        for (const Triple& t :
             m.asserted.match(TriplePattern(person, expertise, std::nullopt))) {
            if (t.object.is_iri() && under.count(t.object.text())) {
                specs.insert(display_label(t.object, schema, display_view));
            }
        }
        out.push_back(ExpertRecord{person, row.bindings.at("name").text(),
                                   display_label(row.bindings.at("dept"), schema, display_view),
                                   std::move(email),
                                   {specs.begin(), specs.end()}});
    }
    return out;
}

std::string experts_json(const MaterializedGraph& m, const Schema& schema,
                         const Term& subject, bool use_inference) {
    ordered_json j = ordered_json::array();
    for (const ExpertRecord& rec : find_experts(m, schema, subject, use_inference)) {
        ordered_json item;
        item["name"] = rec.name;
        item["department"] = rec.department;
        if (rec.email.empty()) {
            item["email"] = nullptr;
        } else {
            item["email"] = rec.email;
        }
        item["specializations"] = rec.specializations;
        j.push_back(std::move(item));
    }
    return j.dump(2) + "\n";
}

std::vector<CollaboratorRecord> find_collaborators(const MaterializedGraph& m,
                                                   const Schema& schema, const Term& person,
                                                   bool suggested) {
    std::set<Term> partners;
    if (suggested) {
        Term pred = Term::iri(suggested_collaborator_iri(schema));
        for (const Triple& t : m.inferred.match(TriplePattern(person, pred, std::nullopt))) {
            partners.insert(t.object);
        }
        for (const Triple& t : m.inferred.match(TriplePattern(std::nullopt, pred, person))) {
            partners.insert(t.subject);
        }
    } else {
        Term pred = schema.resolve_term("collaboratesWith");
        for (const Triple& t : m.asserted.match(TriplePattern(person, pred, std::nullopt))) {
            partners.insert(t.object);
        }
        for (const Triple& t : m.asserted.match(TriplePattern(std::nullopt, pred, person))) {
            partners.insert(t.subject);
        }
    }
    partners.erase(person);

    GraphView display_view = m.view(true);
    std::vector<CollaboratorRecord> out;
    for (const Term& p : partners) {
        out.push_back({p, display_label(p, schema, display_view)});
    }
    return out;
}

std::string collaborators_json(const MaterializedGraph& m, const Schema& schema,
                               const Term& person, bool suggested) {
    ordered_json j = ordered_json::array();
    for (const CollaboratorRecord& rec : find_collaborators(m, schema, person, suggested)) {
        j.push_back({{"iri", rec.person.canonical()}, {"name", rec.name}});
    }
    return j.dump(2) + "\n";
}

std::string profile_json(const MaterializedGraph& m, const Schema& schema,
                         const Term& person) {
    ordered_json j;
    j["iri"] = person.canonical();
    j["name"] = display_label(person, schema, m.view(true));
    j["properties"] = ordered_json::array();

    auto emit = [&](const Graph& g, bool asserted) {
        for (const Triple& t : g.match(TriplePattern(person, std::nullopt, std::nullopt))) {
            std::string source = "asserted";
            if (!asserted) {
                auto it = m.provenance.find(t);
                source = it == m.provenance.end() ? "inferred" : rule_name(it->second);
            }
            j["properties"].push_back({{"predicate", t.predicate.canonical()},
                                       {"object", t.object.canonical()},
                                       {"source", source}});
        }
    };
    emit(m.asserted, true);
    emit(m.inferred, false);
    return j.dump(2) + "\n";
}

std::string query_json(const MaterializedGraph& m, const std::string& query_text,
                       bool use_inference) {
    QueryAst ast = parse_query(query_text);
    std::vector<Solution> rows = evaluate(ast, m.view(use_inference));
    std::vector<std::string> vars = projected_vars(ast);

    ordered_json j;
    j["head"] = vars;
    j["results"] = ordered_json::array();
    for (const Solution& s : rows) {
        ordered_json row = ordered_json::object();
        for (const auto& v : vars) {
            auto it = s.bindings.find(v);
            if (it != s.bindings.end()) row[v] = it->second.canonical();
        }
        j["results"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string solutions_table(const QueryAst& ast, const std::vector<Solution>& solutions) {
    std::vector<std::string> vars = projected_vars(ast);
    std::vector<size_t> width(vars.size());
    std::vector<std::vector<std::string>> rows;

    for (size_t i = 0; i < vars.size(); ++i) width[i] = vars[i].size() + 1;
    for (const Solution& s : solutions) {
        std::vector<std::string> row;
        for (size_t i = 0; i < vars.size(); ++i) {
            auto it = s.bindings.find(vars[i]);
            row.push_back(it == s.bindings.end() ? "" : it->second.canonical());
            width[i] = std::max(width[i], row.back().size());
        }
        rows.push_back(std::move(row));
    }

    std::string out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += " | ";
            out += cells[i];
            if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
        }
        out += "\n";
    };
    std::vector<std::string> header;
    for (const auto& v : vars) header.push_back("?" + v);
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    out += std::to_string(rows.size()) + " solution(s)\n";
    return out;
}

std::string csv_field(const std::string& value) {
    bool needs = value.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    return out + "\"";
}

std::string solutions_csv(const QueryAst& ast, const std::vector<Solution>& solutions) {
    std::vector<std::string> vars = projected_vars(ast);
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ",";
        out += csv_field(vars[i]);
    }
    out += "\n";
    for (const Solution& s : solutions) {
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i) out += ",";
            auto it = s.bindings.find(vars[i]);
            if (it != s.bindings.end()) out += csv_field(it->second.canonical());
        }
        out += "\n";
    }
    return out;
}

}  // namespace fx

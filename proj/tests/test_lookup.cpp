// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include <doctest.h>

#include <json.hpp>

#include "fx/cq.hpp"
#include "fx/labels.hpp"
#include "fx/lookup.hpp"
#include "test_support.hpp"

using namespace fx;

namespace {

const Schema& schema() {
    static Schema s = builtin_faculty_schema();
    return s;
}

const MaterializedGraph& seed() {
    static MaterializedGraph m =
        materialize(fxtest::to_graph(build_seed_dataset(schema())), schema());
    return m;
}

Term fxiri(const std::string& local) { return schema().resolve_term(local); }

}  // namespace

TEST_CASE("humanize splits camel case and slugs") {
    CHECK(humanize_local("MScPhysics") == "MSc Physics");
    CHECK(humanize_local("QuantumMechanics") == "Quantum Mechanics");
    CHECK(humanize_local("ComputerScienceDept") == "Computer Science Dept");
    CHECK(humanize_local("MTechCSE") == "MTech CSE");
    CHECK(humanize_local("priya-sharma") == "Priya Sharma");
    CHECK(humanize_local("BTech") == "BTech");
}

TEST_CASE("slugs are lowercase, dashed, punctuation-free") {
    CHECK(slugify("Md. Riaz") == "md-riaz");
    CHECK(slugify("Priya Sharma") == "priya-sharma");
    CHECK(slugify("MScPhysics") == "msc-physics");
    CHECK(slugify("  Rao,  Jr.  ") == "rao-jr");
}

TEST_CASE("subject resolution accepts labels and local names") {
    auto a = resolve_subject("Quantum Mechanics", schema());
    REQUIRE(a.size() == 1);
    CHECK(a[0] == fxiri("QuantumMechanics"));

    auto b = resolve_subject("quantummechanics", schema());
    REQUIRE(b.size() == 1);
    CHECK(b[0] == a[0]);

    CHECK(resolve_subject("No Such Field", schema()).empty());
}

TEST_CASE("individual resolution: names, locals, slugs, and ambiguity") {
    GraphView view = seed().view(true);
    auto by_name = resolve_individual("Priya Sharma", schema(), view);
    REQUIRE(by_name.size() == 1);
    CHECK(by_name[0] == fxiri("PriyaSharma"));

    CHECK(resolve_individual("md-riaz", schema(), view) ==
          std::vector<Term>{fxiri("MdRiaz")});
    CHECK(resolve_individual("MDRIAZ", schema(), view) ==
          std::vector<Term>{fxiri("MdRiaz")});
    CHECK(resolve_individual("nobody-here", schema(), view).empty());

    // Two individuals that humanize to the same text are both returned.
    Graph g = fxtest::to_graph(build_seed_dataset(schema()));
    g.insert(Triple(Term::iri(schema().base + "priya-sharma"),
                    fxiri("hasName"), Term::literal("Priya Sharma")));
    MaterializedGraph m = materialize(g, schema());
    CHECK(resolve_individual("Priya Sharma", schema(), m.view(true)).size() == 2);
}

TEST_CASE("display labels prefer schema labels and hasName") {
    GraphView view = seed().view(true);
    CHECK(display_label(fxiri("QuantumMechanics"), schema(), view) == "Quantum Mechanics");
    CHECK(display_label(fxiri("MdRiaz"), schema(), view) == "Md. Riaz");
    CHECK(display_label(fxiri("MScPhysics"), schema(), view) == "MSc Physics");
    CHECK(display_label(Term::literal("plain"), schema(), view) == "plain");
}

TEST_CASE("the quantum-mechanics expert lookup reproduces the referral record") {
    auto records = find_experts(seed(), schema(), fxiri("QuantumMechanics"), true);
    REQUIRE(records.size() == 1);
    CHECK(records[0].name == "Priya Sharma");
    CHECK(records[0].department == "MSc Physics");
    CHECK(records[0].email == "priyash@university.edu");
    CHECK(records[0].specializations == std::vector<std::string>{"Quantum Mechanics"});
}

TEST_CASE("expert lookup equals the canonical query evaluation") {
    Term cs = fxiri("ComputerScience");
    QueryAst ast = parse_query(experts_query_text(schema(), cs));
    auto rows = evaluate(ast, seed().view(true));
    auto records = find_experts(seed(), schema(), cs, true);
    REQUIRE(records.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(records[i].person == rows[i].bindings.at("f"));
        CHECK(records[i].name == rows[i].bindings.at("name").text());
    }
}

TEST_CASE("inference versus no inference for experts") {
    Term cs = fxiri("ComputerScience");
    auto with = find_experts(seed(), schema(), cs, true);
    auto without = find_experts(seed(), schema(), cs, false);
    CHECK(with.size() > without.size());
    auto has = [](const std::vector<ExpertRecord>& v, const char* name) {
        return std::any_of(v.begin(), v.end(),
                           [&](const ExpertRecord& r) { return r.name == name; });
    };
    CHECK(has(with, "Vikram Singh"));
    CHECK_FALSE(has(without, "Vikram Singh"));
    CHECK(has(without, "Anil Kumar"));
}

TEST_CASE("experts JSON shape") {
    auto j = nlohmann::json::parse(
        experts_json(seed(), schema(), fxiri("QuantumMechanics"), true));
    REQUIRE(j.size() == 1);
    CHECK(j[0]["name"] == "Priya Sharma");
    CHECK(j[0]["department"] == "MSc Physics");
    CHECK(j[0]["email"] == "priyash@university.edu");
    CHECK(j[0]["specializations"] == nlohmann::json::array({"Quantum Mechanics"}));

    // The email-less faculty member serializes null, not a missing key.
    auto ai = nlohmann::json::parse(
        experts_json(seed(), schema(), fxiri("ArtificialIntelligence"), false));
    bool saw_null_email = false;
    for (const auto& rec : ai) {
        if (rec["name"] == "Vikram Singh") saw_null_email = rec["email"].is_null();
    }
    CHECK(saw_null_email);
}

TEST_CASE("collaborators: asserted is direction-blind, suggested is derived") {
    auto direct = find_collaborators(seed(), schema(), fxiri("AnilKumar"), false);
    REQUIRE(direct.size() == 1);  // MdRiaz asserted the link; Anil still sees it
    CHECK(direct[0].name == "Md. Riaz");

    auto suggested = find_collaborators(seed(), schema(), fxiri("PriyaSharma"), true);
    // Priya shares physics-level expertise with Arjun Nair.
    CHECK(std::any_of(suggested.begin(), suggested.end(),
                      [](const CollaboratorRecord& r) { return r.name == "Arjun Nair"; }));
    // Nobody suggests themselves.
    CHECK(std::none_of(suggested.begin(), suggested.end(),
                       [](const CollaboratorRecord& r) { return r.name == "Priya Sharma"; }));
}

TEST_CASE("profiles carry provenance flags") {
    auto j = nlohmann::json::parse(profile_json(seed(), schema(), fxiri("VikramSingh")));
    CHECK(j["iri"] == schema().resolve("VikramSingh"));
    CHECK(j["name"] == "Vikram Singh");
    bool saw_asserted = false, saw_r2 = false;
    for (const auto& p : j["properties"]) {
        if (p["source"] == "asserted") saw_asserted = true;
        if (p["source"] == "R2" &&
            p["object"] == schema().resolve("ComputerScience")) {
            saw_r2 = true;
        }
    }
    CHECK(saw_asserted);
    CHECK(saw_r2);
}

TEST_CASE("query JSON lists head variables and canonical rows") {
    auto j = nlohmann::json::parse(query_json(
        seed(),
        "PREFIX fx: <" + schema().base + ">\n"
        "SELECT ?name WHERE { ?f fx:hasExpertiseIn fx:QuantumMechanics . "
        "?f fx:hasName ?name . }",
        true));
    CHECK(j["head"] == nlohmann::json::array({"name"}));
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["name"] == "\"Priya Sharma\"");
}

TEST_CASE("solution tables and CSV render deterministically") {
    QueryAst ast = parse_query(
        "PREFIX fx: <" + schema().base + ">\n"
        "SELECT ?name ?email WHERE { ?f fx:teachesIn fx:MTechCSE . "
        "?f fx:hasName ?name . ?f fx:hasEmail ?email . }");
    auto rows = evaluate(ast, seed().view(false));
    std::string table = solutions_table(ast, rows);
    CHECK(table.find("?name") != std::string::npos);
    CHECK(table.find("\"Md. Riaz\"") != std::string::npos);
    CHECK(table.find("2 solution(s)") != std::string::npos);

    std::string csv = solutions_csv(ast, rows);
    CHECK(csv.rfind("name,email\n", 0) == 0);
    // Canonical literals carry quotes, so CSV quoting doubles them.
    CHECK(csv.find("\"\"Md. Riaz\"\"") != std::string::npos);
}

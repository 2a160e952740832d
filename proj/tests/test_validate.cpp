// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include <doctest.h>

#include <json.hpp>

#include "fx/cq.hpp"
#include "fx/validate.hpp"
#include "test_support.hpp"

using namespace fx;

namespace {

const Schema& schema() {
    static Schema s = builtin_faculty_schema();
    return s;
}

Term fxiri(const std::string& local) { return schema().resolve_term(local); }

Graph seed_graph() { return fxtest::to_graph(build_seed_dataset(schema())); }

ValidationReport validate_with(const Graph& g, const Schema& s) {
    return validate(materialize(g, s), s);
}

// One report for the seed plus a single extra triple.
ValidationReport inject(const Triple& extra) {
    Graph g = seed_graph();
    g.insert(extra);
    return validate_with(g, schema());
}

int count_code(const ValidationReport& r, const std::string& code) {
    int n = 0;
    for (const auto& f : r.findings) n += f.code == code ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("the seed dataset is conformant: zero errors, zero warnings") {
    ValidationReport report = validate_with(seed_graph(), schema());
    CAPTURE(report.to_text());
    CHECK(report.clean());
}

TEST_CASE("DOMAIN_VIOLATION: a department with expertise") {
    ValidationReport r = inject(
        Triple(fxiri("MScPhysics"), fxiri("hasExpertiseIn"), fxiri("ArtificialIntelligence")));
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "DOMAIN_VIOLATION") == 1);
    CHECK(r.findings[0].severity == Severity::Error);
    CHECK(r.findings[0].subject == fxiri("MScPhysics"));
}

TEST_CASE("RANGE_VIOLATION: a subject area used as a department") {
    ValidationReport r = inject(
        Triple(fxiri("PriyaSharma"), fxiri("belongsToDepartment"), fxiri("QuantumMechanics")));
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "RANGE_VIOLATION") == 1);
}

TEST_CASE("RANGE_VIOLATION: literal where an individual belongs and vice versa") {
    ValidationReport literal_object = inject(
        Triple(fxiri("PriyaSharma"), fxiri("collaboratesWith"), Term::literal("Anil")));
    CHECK(count_code(literal_object, "RANGE_VIOLATION") == 1);

    ValidationReport iri_email =
        inject(Triple(fxiri("VikramSingh"), fxiri("hasEmail"), fxiri("NotALiteral")));
    CHECK(count_code(iri_email, "RANGE_VIOLATION") == 1);
}

TEST_CASE("CARD_MAX: two email addresses") {
    ValidationReport r = inject(
        Triple(fxiri("PriyaSharma"), fxiri("hasEmail"), Term::literal("second@university.edu")));
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "CARD_MAX") == 1);
    CHECK(r.findings[0].subject == fxiri("PriyaSharma"));
    CHECK(r.findings[0].detail.find("Email") != std::string::npos);
}

TEST_CASE("CARD_MIN: a declared faculty member without a department") {
    Graph g = seed_graph();
    g.insert(Triple(fxiri("NewComer"), Term::iri(vocab::kRdfType), fxiri("FacultyMember")));
    g.insert(Triple(fxiri("NewComer"), fxiri("hasName"), Term::literal("New Comer")));
    ValidationReport r = validate_with(g, schema());
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "CARD_MIN") == 1);
    CHECK(r.findings[0].severity == Severity::Warning);
    CHECK(r.findings[0].subject == fxiri("NewComer"));
}

TEST_CASE("UNKNOWN_PREDICATE is a warning") {
    ValidationReport r = inject(
        Triple(fxiri("PriyaSharma"), fxiri("hasOfficePhone"), Term::literal("x1234")));
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "UNKNOWN_PREDICATE") == 1);
    CHECK(r.findings[0].severity == Severity::Warning);
}

TEST_CASE("DANGLING_IRI: a collaborator nobody describes") {
    ValidationReport r =
        inject(Triple(fxiri("MdRiaz"), fxiri("collaboratesWith"), fxiri("GhostPerson")));
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "DANGLING_IRI") == 1);
    CHECK(r.findings[0].subject == fxiri("GhostPerson"));
}

TEST_CASE("SUBCLASS_CYCLE: a cyclic schema is reported, not crashed on") {
    Schema cyclic = schema();
    cyclic.classes[cyclic.resolve("ComputerScience")].parents.insert(
        cyclic.resolve("ArtificialIntelligence"));
    ValidationReport r = validate_asserted(seed_graph(), cyclic);
    CHECK(r.findings.size() == 1);
    CHECK(count_code(r, "SUBCLASS_CYCLE") == 1);
    CHECK(r.findings[0].severity == Severity::Error);
}

TEST_CASE("validation is pure and deterministically ordered") {
    Graph g = seed_graph();
    g.insert(Triple(fxiri("PriyaSharma"), fxiri("hasEmail"), Term::literal("x@u.e")));
    g.insert(Triple(fxiri("PriyaSharma"), fxiri("zz_unknown"), Term::literal("1")));
    g.insert(Triple(fxiri("MdRiaz"), fxiri("collaboratesWith"), fxiri("GhostPerson")));

    ValidationReport a = validate_with(g, schema());
    ValidationReport b = validate_with(g, schema());
    CHECK(a.findings == b.findings);
    CHECK(a.to_json() == b.to_json());

    // Sorted by code, then subject.
    for (size_t i = 1; i < a.findings.size(); ++i) {
        CHECK(a.findings[i - 1].code <= a.findings[i].code);
    }
    CHECK(a.findings.front().code == "CARD_MAX");
    CHECK(a.findings.back().code == "UNKNOWN_PREDICATE");
}

TEST_CASE("report JSON carries the stable field names") {
    Graph g = seed_graph();
    g.insert(Triple(fxiri("PriyaSharma"), fxiri("hasEmail"), Term::literal("x@u.e")));
    ValidationReport r = validate_with(g, schema());
    auto j = nlohmann::json::parse(r.to_json());
    CHECK(j["errors"] == 1);
    CHECK(j["warnings"] == 0);
    REQUIRE(j["findings"].size() == 1);
    for (const char* field : {"severity", "code", "subject", "detail"}) {
        CHECK(j["findings"][0].contains(field));
    }
}

TEST_CASE("asserted-only validation sees no inverse-filled links") {
    // A department-side link only: materialized counting satisfies the
    // person's minimum via R4, asserted-only cannot see the person at all
    // (nothing is typed), so both modes stay quiet about CARD_MIN — but the
    // *dangling* check differs: the person is rescued only by the inferred
    // belongsToDepartment subject position.
    Graph g;
    g.insert(Triple(fxiri("SoloDept"), Term::iri(vocab::kRdfType), fxiri("Department")));
    g.insert(Triple(fxiri("SoloDept"), fxiri("hasFacultyMember"), fxiri("LonePerson")));

    ValidationReport with_inference = validate_with(g, schema());
    CHECK(count_code(with_inference, "DANGLING_IRI") == 0);

    ValidationReport asserted_only = validate_asserted(g, schema());
    CHECK(count_code(asserted_only, "DANGLING_IRI") == 1);
}

TEST_CASE("every finding cites a removable cause") {
    std::vector<Triple> bad = {
        Triple(fxiri("MScPhysics"), fxiri("hasExpertiseIn"), fxiri("ArtificialIntelligence")),
        Triple(fxiri("PriyaSharma"), fxiri("hasEmail"), Term::literal("x@u.e")),
        Triple(fxiri("MdRiaz"), fxiri("collaboratesWith"), fxiri("GhostPerson")),
        Triple(fxiri("PriyaSharma"), fxiri("mystery"), Term::literal("1")),
    };
    for (const Triple& t : bad) {
        Graph g = seed_graph();
        g.insert(t);
        CHECK_FALSE(validate_with(g, schema()).clean());
        g.remove(t);
        CHECK(validate_with(g, schema()).clean());
    }
}

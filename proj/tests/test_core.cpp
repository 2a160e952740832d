// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include <doctest.h>

#include "fx/graph.hpp"
#include "fx/schema.hpp"
#include "fx/term.hpp"
#include "test_support.hpp"

using namespace fx;

namespace {
const std::string kBase = kDefaultBase;
Term fxiri(const std::string& local) { return Term::iri(kBase + local); }
}  // namespace

TEST_CASE("make_iri concatenates namespace and local name") {
    Term t = make_iri("https://example.org/fx#", "QuantumMechanics");
    CHECK(t.is_iri());
    CHECK(t.text() == "https://example.org/fx#QuantumMechanics");
    CHECK(t.local_name() == "QuantumMechanics");
}

TEST_CASE("make_iri rejects whitespace and empty parts") {
    CHECK_THROWS_AS(make_iri("https://example.org/fx#", "priya sharma"), MalformedIri);
    CHECK_THROWS_AS(make_iri("", "X"), MalformedIri);
    CHECK_THROWS_AS(make_iri("https://example.org/fx#", ""), MalformedIri);
    CHECK_THROWS_AS(Term::iri("no-scheme-separator"), MalformedIri);
}

TEST_CASE("term equality is exact on kind and populated fields") {
    CHECK(Term::iri("a:x") == Term::iri("a:x"));
    CHECK(Term::iri("a:x") != Term::iri("a:y"));
    CHECK(Term::literal("x") != Term::iri("a:x"));
    CHECK(Term::literal("x") != Term::literal("x", vocab::kXsdString));
    CHECK(Term::blank("x") != Term::iri("_:x"));
    CHECK(Term::literal("x", vocab::kXsdString) == Term::literal("x", vocab::kXsdString));
}

TEST_CASE("terms round-trip through canonical text") {
    std::vector<Term> cases = {
        Term::iri("https://example.org/fx#PriyaSharma"),
        Term::literal("priyash@university.edu"),
        Term::literal("line\nbreak \"quoted\" \\slash"),
        Term::literal("42", "http://www.w3.org/2001/XMLSchema#integer"),
        Term::blank("b42"),
        Term::iri("_:looks-like-a-blank"),
    };
    for (const Term& t : cases) {
        CAPTURE(t.canonical());
        CHECK(Term::from_canonical(t.canonical()) == t);
    }
}

TEST_CASE("triples reject literal subjects and non-IRI predicates") {
    Term s = fxiri("PriyaSharma"), p = fxiri("hasExpertiseIn"), o = fxiri("QuantumMechanics");
    CHECK_NOTHROW(Triple(s, p, o));
    CHECK_NOTHROW(Triple(Term::blank("b"), p, Term::literal("x")));
    CHECK_THROWS_AS(Triple(Term::literal("x"), p, o), InvalidTriple);
    CHECK_THROWS_AS(Triple(s, Term::blank("b"), o), InvalidTriple);
    CHECK_THROWS_AS(Triple(s, Term::literal("p"), o), InvalidTriple);
}

TEST_CASE("graph insert has set semantics and updates all indexes") {
    Graph g;
    Triple t(fxiri("PriyaSharma"), fxiri("hasExpertiseIn"), fxiri("QuantumMechanics"));
    CHECK(g.insert(t));
    CHECK(g.size() == 1);
    CHECK_FALSE(g.insert(t));
    CHECK(g.size() == 1);
    CHECK(g.indexes_consistent());
}

TEST_CASE("graph remove restores the prior state") {
    Graph g;
    Triple a(fxiri("A"), fxiri("p"), fxiri("B"));
    Triple b(fxiri("B"), fxiri("p"), fxiri("C"));
    g.insert(a);
    Graph before = g;
    g.insert(b);
    CHECK(g.remove(b));
    CHECK(g == before);
    CHECK_FALSE(g.remove(b));
    CHECK(g.indexes_consistent());
}

TEST_CASE("match on the empty graph returns nothing") {
    Graph g;
    CHECK(g.match(TriplePattern(std::nullopt, std::nullopt, std::nullopt)).empty());
}

TEST_CASE("match against the expertise example") {
    Graph g;
    g.insert(Triple(fxiri("PriyaSharma"), fxiri("hasExpertiseIn"), fxiri("QuantumMechanics")));
    g.insert(Triple(fxiri("PriyaSharma"), fxiri("hasEmail"),
                    Term::literal("priyash@university.edu")));
    auto hits = g.match(
        TriplePattern(std::nullopt, fxiri("hasExpertiseIn"), fxiri("QuantumMechanics")));
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].subject == fxiri("PriyaSharma"));
}

TEST_CASE("bound patterns reject illegal positions") {
    CHECK_THROWS_AS(TriplePattern(Term::literal("x"), std::nullopt, std::nullopt),
                    InvalidTriple);
    CHECK_THROWS_AS(TriplePattern(std::nullopt, Term::blank("b"), std::nullopt),
                    InvalidTriple);
}

TEST_CASE("match equals a linear scan for random graphs and patterns") {
    std::mt19937_64 rng(7001);
    fxtest::Pools pools = fxtest::small_pools();
    for (int round = 0; round < 120; ++round) {
        auto triples = fxtest::random_triples(pools, 200, rng);
        Graph g = fxtest::to_graph(triples);
        REQUIRE(g.indexes_consistent());

        // All eight boundness combinations.
        for (int mask = 0; mask < 8; ++mask) {
            std::optional<Term> s, p, o;
            if (mask & 1) s = fxtest::pick(pools.subjects, rng);
            if (mask & 2) p = fxtest::pick(pools.predicates, rng);
            if (mask & 4) o = fxtest::pick(pools.objects, rng);
            TriplePattern pattern(s, p, o);
            CHECK(g.match(pattern) == fxtest::scan_match(triples, pattern));
        }
    }
}

TEST_CASE("random insert/remove interleavings agree with a std::set model") {
    std::mt19937_64 rng(7002);
    fxtest::Pools pools = fxtest::small_pools();
    Graph g;
    std::set<Triple> model;
    for (int step = 0; step < 3000; ++step) {
        Triple t = fxtest::random_triple(pools, rng);
        if (rng() % 2) {
            CHECK(g.insert(t) == model.insert(t).second);
        } else {
            CHECK(g.remove(t) == (model.erase(t) > 0));
        }
    }
    CHECK(g.size() == model.size());
    CHECK(g.indexes_consistent());
    auto all = g.match(TriplePattern(std::nullopt, std::nullopt, std::nullopt));
    CHECK(std::set<Triple>(all.begin(), all.end()) == model);
}

TEST_CASE("builtin schema matches the published hierarchy") {
    Schema s = builtin_faculty_schema();

    const ClassDef* ai = s.find_class(s.resolve("ArtificialIntelligence"));
    REQUIRE(ai != nullptr);
    CHECK(ai->parents.count(s.resolve("ComputerScience")) == 1);
    CHECK(ai->level == ClassLevel::Bottom);

    const PropertyDef* hfm = s.find_property(s.resolve("hasFacultyMember"));
    REQUIRE(hfm != nullptr);
    REQUIRE(hfm->inverse_of.has_value());
    CHECK(*hfm->inverse_of == s.resolve("belongsToDepartment"));

    int roots = 0;
    for (const auto& [iri, cls] : s.classes) {
        if (cls.level == ClassLevel::Root) ++roots;
    }
    CHECK(roots == 1);
    CHECK_NOTHROW(s.check_integrity());
}

TEST_CASE("builtin schema is idempotent") {
    CHECK(builtin_faculty_schema() == builtin_faculty_schema());
    Schema other = builtin_faculty_schema("http://elsewhere/ns#");
    CHECK(other.has_class("http://elsewhere/ns#QuantumMechanics"));
    CHECK(other != builtin_faculty_schema());
}

TEST_CASE("every named property is defined exactly once") {
    Schema s = builtin_faculty_schema();
    for (const char* name :
         {"belongsToDepartment", "hasFacultyMember", "teachesIn", "hasExpertiseIn",
          "collaboratesWith", "teaches", "hasName", "hasEmail"}) {
        CAPTURE(name);
        CHECK(s.properties.count(s.resolve(name)) == 1);
    }
    CHECK(s.properties.size() == 8);
    CHECK(s.classes.size() == 30);  // root + 4 top + 4 degrees + 8 disciplines + 13 specializations
}

TEST_CASE("schema cardinality bounds are ordered") {
    Schema s = builtin_faculty_schema();
    const PropertyDef* name = s.find_property(s.resolve("hasName"));
    REQUIRE(name != nullptr);
    CHECK(name->min_card == 1);
    CHECK(name->max_card == 1u);
    const PropertyDef* email = s.find_property(s.resolve("hasEmail"));
    REQUIRE(email != nullptr);
    CHECK(email->min_card == 0);
    CHECK(email->max_card == 1u);
    const PropertyDef* dept = s.find_property(s.resolve("belongsToDepartment"));
    REQUIRE(dept != nullptr);
    CHECK(dept->min_card == 1);
    CHECK_FALSE(dept->max_card.has_value());
}

TEST_CASE("schema_triples exports one edge per direct parent") {
    Schema s = builtin_faculty_schema();
    auto triples = schema_triples(s);
    CHECK(triples.size() == 29);  // every class except the root has one parent
    Term sub = Term::iri(vocab::kRdfsSubClassOf);
    for (const Triple& t : triples) CHECK(t.predicate == sub);
}

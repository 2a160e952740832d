// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors
//
// Acceptance suite. Each criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "fx/cq.hpp"
#include "fx/lookup.hpp"
#include "fx/query.hpp"
#include "fx/service.hpp"
#include "fx/turtle.hpp"
#include "fx/validate.hpp"
#include "test_support.hpp"

using namespace fx;

namespace {

const std::string kFixtures = FX_FIXTURES_DIR;
const std::string kCli = FX_CLI_PATH;
const std::string kSeedFile = kFixtures + "/seed.ttl";
const std::string kGolden = kFixtures + "/golden";

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

const Schema& schema() {
    static Schema s = builtin_faculty_schema();
    return s;
}

Graph seed_graph() { return fxtest::to_graph(build_seed_dataset(schema())); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string run_cli(const std::string& args) {
    std::string out_path = "/tmp/fx_acceptance_out";
    std::string cmd = kCli + " " + args + " >" + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "CLI failed: " + cmd);
    return slurp(out_path);
}

// C1 -------------------------------------------------------------------

void criterion_competency_coverage() {
    auto t0 = std::chrono::steady_clock::now();
    CqReport report = run_all(seed_graph(), schema(), kGolden);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    require(report.total() == 21, "expected 21 questions");
    require(report.passed() == 21, "only " + std::to_string(report.passed()) +
                                       "/21 matched the golden answers");
    require(elapsed.count() < 2.0,
            "cq run took " + std::to_string(elapsed.count()) + "s (budget 2s)");
}

// C2 -------------------------------------------------------------------

void criterion_expert_referral() {
    MaterializedGraph m = materialize(seed_graph(), schema());
    auto records =
        find_experts(m, schema(), schema().resolve_term("QuantumMechanics"), true);
    require(records.size() == 1, "expected exactly one quantum-mechanics expert");
    const ExpertRecord& r = records[0];
    require(r.name == "Priya Sharma", "name was " + r.name);
    require(r.department == "MSc Physics", "department was " + r.department);
    require(r.email == "priyash@university.edu", "email was " + r.email);
    require(r.specializations == std::vector<std::string>{"Quantum Mechanics"},
            "specializations mismatched");
}

// C3 -------------------------------------------------------------------

void criterion_inference_reproduction() {
    MaterializedGraph m = materialize(seed_graph(), schema());
    // The seed asserts Vikram Singh's expertise only at ArtificialIntelligence.
    Term vikram = schema().resolve_term("VikramSingh");
    Term expertise = schema().resolve_term("hasExpertiseIn");
    Term cs = schema().resolve_term("ComputerScience");
    auto asserted = m.asserted.match(TriplePattern(vikram, expertise, std::nullopt));
    require(asserted.size() == 1 &&
                asserted[0].object == schema().resolve_term("ArtificialIntelligence"),
            "fixture drift: Vikram Singh must be asserted only at AI");

    QueryAst ast = parse_query("PREFIX fx: <" + schema().base + ">\n" +
                               "SELECT ?f WHERE { ?f fx:hasExpertiseIn fx:ComputerScience . }");
    auto with = evaluate(ast, m.view(true));
    auto without = evaluate(ast, m.view(false));
    auto holds = [&](const std::vector<Solution>& rows) {
        return std::any_of(rows.begin(), rows.end(), [&](const Solution& s) {
            return s.bindings.at("f") == vikram;
        });
    };
    require(holds(with), "inference on must return the AI-only faculty member");
    require(!holds(without), "inference off must omit the AI-only faculty member");
    Triple derived(vikram, expertise, cs);
    require(m.inferred.contains(derived), "derived triple missing");
    require(m.provenance.at(derived) == Rule::R2, "provenance must credit R2");
}

// C4 -------------------------------------------------------------------

void criterion_query_oracle() {
    std::mt19937_64 rng(424242);
    fxtest::Pools pools = fxtest::small_pools();
    std::vector<std::string> vars = {"a", "b", "c", "d"};

    int mismatches = 0;
    for (int round = 0; round < 1000; ++round) {
        auto triples = fxtest::random_triples(pools, 100, rng);
        Graph g = fxtest::to_graph(triples);

        QueryAst ast;
        auto slot = [&](bool allow_literal) {
            if (rng() % 2) return PatternTerm::variable(vars[rng() % vars.size()]);
            if (allow_literal && rng() % 3 == 0) {
                return PatternTerm::bound(fxtest::pick(pools.objects, rng));
            }
            if (rng() % 4 == 0) {
                return PatternTerm::bound(fxtest::pick(pools.predicates, rng));
            }
            return PatternTerm::bound(fxtest::pick(pools.subjects, rng));
        };
        size_t patterns = 1 + rng() % 4;  // <= 4 patterns
        for (size_t i = 0; i < patterns; ++i) {
            ast.pattern.triples.push_back({slot(false), slot(false), slot(true)});
        }
        int shape = int(rng() % 8);
        if (shape == 0) {
            GroupPattern opt;
            opt.triples.push_back({slot(false), slot(false), slot(true)});
            ast.pattern.optionals.push_back(std::move(opt));
        } else if (shape == 1) {
            GroupPattern l, r;
            l.triples.push_back({slot(false), slot(false), slot(true)});
            r.triples.push_back({slot(false), slot(false), slot(true)});
            ast.pattern.unions.emplace_back(std::move(l), std::move(r));
        }

        std::set<std::string> bound;
        for (const auto& t : ast.pattern.triples) {
            for (const auto* pt : {&t.subject, &t.predicate, &t.object}) {
                if (pt->is_var()) bound.insert(pt->var);
            }
        }
        std::vector<std::string> bound_list(bound.begin(), bound.end());
        size_t filters = rng() % 3;  // <= 2 filters
        for (size_t i = 0; i < filters && !bound_list.empty(); ++i) {
            FilterExpr f;
            f.op = rng() % 2 ? FilterOp::Eq : FilterOp::Neq;
            f.left_var = bound_list[rng() % bound_list.size()];
            if (rng() % 2) {
                f.right_var = bound_list[rng() % bound_list.size()];
            } else {
                f.right_term = fxtest::pick(pools.objects, rng);
            }
            ast.pattern.filters.push_back(std::move(f));
        }
        if (bound_list.empty()) {
            ast.star = true;
        } else {
            for (const auto& v : bound_list) {
                if (rng() % 2) ast.projection.push_back(v);
            }
            if (ast.projection.empty()) ast.star = true;
        }
        ast.distinct = rng() % 3 == 0;
        if (rng() % 5 == 0) ast.limit = 1 + rng() % 5;

        auto mine = fxtest::solution_multiset(evaluate(ast, g));
        auto oracle = fxtest::solution_multiset(fxtest::brute_force_query(ast, triples));
        if (mine != oracle) ++mismatches;
    }
    require(mismatches == 0, std::to_string(mismatches) + "/1000 cases mismatched");
}

// C5 -------------------------------------------------------------------

void criterion_reasoner_properties() {
    std::mt19937_64 rng(515151);
    const Schema& s = schema();

    std::vector<Term> people;
    for (int i = 0; i < 6; ++i) people.push_back(Term::iri(s.base + "p" + std::to_string(i)));
    std::vector<Term> things = people;
    for (const char* cls : {"QuantumMechanics", "Optics", "ComputerScience",
                            "ArtificialIntelligence", "Calculus", "SubjectArea",
                            "FacultyMember", "MTechCSE", "Thing"}) {
        things.push_back(s.resolve_term(cls));
    }
    std::vector<Term> preds;
    for (const char* p : {"hasExpertiseIn", "teaches", "teachesIn", "belongsToDepartment",
                          "hasFacultyMember", "collaboratesWith"}) {
        preds.push_back(s.resolve_term(p));
    }
    preds.push_back(Term::iri(vocab::kRdfType));
    preds.push_back(Term::iri("http://junk/unrelated"));

    auto random_graph = [&](size_t max_n) {
        std::uniform_int_distribution<size_t> count(0, max_n);
        size_t target = count(rng);
        std::set<Triple> out;
        while (out.size() < target) {
            out.insert(Triple(fxtest::pick(people, rng), fxtest::pick(preds, rng),
                              fxtest::pick(things, rng)));
        }
        return std::vector<Triple>(out.begin(), out.end());
    };

    for (int round = 0; round < 500; ++round) {
        auto triples = random_graph(200);
        MaterializedGraph m = materialize(fxtest::to_graph(triples), s);

        // Naive-fixpoint oracle equality.
        std::set<Triple> mine(m.inferred.triples().begin(), m.inferred.triples().end());
        require(mine == fxtest::naive_infer(triples, s),
                "round " + std::to_string(round) + ": fixpoint differs from the oracle");

        // Idempotence.
        Graph closed = m.asserted;
        for (const Triple& t : m.inferred.triples()) closed.insert(t);
        require(materialize(closed, s).inferred.empty(),
                "round " + std::to_string(round) + ": closure was not idempotent");

        // Monotonicity against a random subset.
        std::vector<Triple> subset;
        for (const Triple& t : triples) {
            if (rng() % 2) subset.push_back(t);
        }
        MaterializedGraph small = materialize(fxtest::to_graph(subset), s);
        for (const Triple& t : small.inferred.triples()) {
            require(m.inferred.contains(t) || m.asserted.contains(t),
                    "round " + std::to_string(round) + ": monotonicity violated");
        }
    }
}

// C6 -------------------------------------------------------------------

void criterion_round_trips() {
    // The committed seed file is exactly what the writer produces, and
    // parses back to exactly the built dataset.
    auto built = build_seed_dataset(schema());
    std::string written = write_turtle(built, schema().prefixes);
    require(written == slurp(kSeedFile), "seed.ttl is not byte-identical to the writer output");
    auto parsed = parse_turtle(written, schema().base);
    require(std::set<Triple>(parsed.begin(), parsed.end()) ==
                std::set<Triple>(built.begin(), built.end()),
            "seed round-trip lost triples");

    std::mt19937_64 rng(616161);
    fxtest::Pools pools = fxtest::small_pools();
    std::map<std::string, std::string> prefixes = {{"t", "http://t/"}};
    for (int round = 0; round < 200; ++round) {
        auto triples = fxtest::random_triples(pools, 80, rng);
        std::string doc = write_turtle(triples, prefixes);
        require(doc == write_turtle(triples, prefixes), "serialization not deterministic");
        auto back = parse_turtle(doc);
        require(std::set<Triple>(back.begin(), back.end()) ==
                    std::set<Triple>(triples.begin(), triples.end()),
                "round " + std::to_string(round) + ": round-trip lost triples");
    }
}

// C7 -------------------------------------------------------------------

void criterion_validator_fault_injection() {
    const Schema& s = schema();
    auto fxiri = [&](const char* local) { return s.resolve_term(local); };

    ValidationReport clean = validate(materialize(seed_graph(), s), s);
    require(clean.clean(), "the clean fixture must produce zero findings");

    struct Injection {
        const char* code;
        std::function<void(Graph&, Schema&)> apply;
    };
    std::vector<Injection> injections = {
        {"DOMAIN_VIOLATION",
         [&](Graph& g, Schema&) {
             g.insert(Triple(fxiri("MScPhysics"), fxiri("hasExpertiseIn"),
                             fxiri("ArtificialIntelligence")));
         }},
        {"RANGE_VIOLATION",
         [&](Graph& g, Schema&) {
             g.insert(Triple(fxiri("PriyaSharma"), fxiri("belongsToDepartment"),
                             fxiri("QuantumMechanics")));
         }},
        {"CARD_MAX",
         [&](Graph& g, Schema&) {
             g.insert(Triple(fxiri("PriyaSharma"), fxiri("hasEmail"),
                             Term::literal("second@university.edu")));
         }},
        {"CARD_MIN",
         [&](Graph& g, Schema&) {
             g.insert(Triple(fxiri("NewComer"), Term::iri(vocab::kRdfType),
                             fxiri("FacultyMember")));
             g.insert(Triple(fxiri("NewComer"), fxiri("hasName"),
                             Term::literal("New Comer")));
         }},
        {"UNKNOWN_PREDICATE",
         [&](Graph& g, Schema&) {
             g.insert(Triple(fxiri("PriyaSharma"), fxiri("hasOfficePhone"),
                             Term::literal("x1234")));
         }},
        {"DANGLING_IRI",
         [&](Graph& g, Schema&) {
             g.insert(Triple(fxiri("MdRiaz"), fxiri("collaboratesWith"),
                             fxiri("GhostPerson")));
         }},
        {"SUBCLASS_CYCLE",
         [&](Graph&, Schema& sch) {
             sch.classes[sch.resolve("ComputerScience")].parents.insert(
                 sch.resolve("ArtificialIntelligence"));
         }},
    };

    for (const auto& inj : injections) {
        Graph g = seed_graph();
        Schema sch = s;
        inj.apply(g, sch);
        ValidationReport report = sch == s ? validate(materialize(g, sch), sch)
                                           : validate_asserted(g, sch);
        int hits = 0;
        for (const auto& f : report.findings) hits += f.code == inj.code ? 1 : 0;
        require(hits == 1, std::string(inj.code) + ": expected exactly one finding, got " +
                               std::to_string(hits) + " (of " +
                               std::to_string(report.findings.size()) + " total)");
        require(report.findings.size() == 1,
                std::string(inj.code) + ": expected no side findings");
    }
}

// C8 -------------------------------------------------------------------

void criterion_cli_service_parity() {
    ExpertService service(materialize(seed_graph(), schema()), schema());
    int port = service.start(0);
    httplib::Client client("127.0.0.1", port);

    // /experts
    auto http_experts = client.Get("/experts?subject=Quantum%20Mechanics");
    require(http_experts && http_experts->status == 200, "GET /experts failed");
    std::string cli_experts =
        run_cli("experts \"Quantum Mechanics\" --json --data " + kSeedFile);
    require(http_experts->body == cli_experts, "/experts body != CLI --json output");

    // /collaborators (both modes)
    for (const char* mode : {"", "?suggested=true"}) {
        auto http = client.Get(std::string("/collaborators/priya-sharma") + mode);
        require(http && http->status == 200, "GET /collaborators failed");
        std::string flag = std::string(mode).empty() ? "" : " --suggested";
        std::string cli =
            run_cli("collaborators priya-sharma --json --data " + kSeedFile + flag);
        require(http->body == cli, "/collaborators body != CLI --json output");
    }

    // /query
    std::string query_text = "PREFIX fx: <" + schema().base + ">\n" +
                             "SELECT ?name ?dept WHERE { ?dept fx:hasFacultyMember ?f . "
                             "?f fx:hasName ?name . }";
    std::string query_file = "/tmp/fx_acceptance_query.rq";
    {
        std::ofstream out(query_file);
        out << query_text;
    }
    nlohmann::json body;
    body["query"] = query_text;
    body["inference"] = true;
    auto http_query = client.Post("/query", body.dump(), "application/json");
    require(http_query && http_query->status == 200, "POST /query failed");
    std::string cli_query =
        run_cli("query " + kSeedFile + " --query-file " + query_file + " --json");
    require(http_query->body == cli_query, "/query body != CLI --json output");
    std::remove(query_file.c_str());

    service.stop();
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        void (*fn)();
    };
    const std::vector<Criterion> criteria = {
        {"C1 competency coverage: 21/21 golden answers under 2s", criterion_competency_coverage},
        {"C2 expert referral record reproduced exactly", criterion_expert_referral},
        {"C3 inference on/off behavior with R2 provenance", criterion_inference_reproduction},
        {"C4 query engine vs brute-force oracle, 1000 cases", criterion_query_oracle},
        {"C5 reasoner idempotence/monotonicity/oracle, 500 graphs", criterion_reasoner_properties},
        {"C6 turtle round-trips and byte determinism", criterion_round_trips},
        {"C7 validator fault injection, 7 codes", criterion_validator_fault_injection},
        {"C8 CLI/service JSON parity", criterion_cli_service_parity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.fn();
            std::printf("[PASS] %s\n", c.name);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] %s: %s\n", c.name, e.what());
        }
        std::fflush(stdout);
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

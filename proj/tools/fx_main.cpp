// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fx/cq.hpp"
#include "fx/csv.hpp"
#include "fx/labels.hpp"
#include "fx/lookup.hpp"
#include "fx/query.hpp"
#include "fx/service.hpp"
#include "fx/turtle.hpp"
#include "fx/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::vector<std::string> data_files;
    std::string base_iri = fx::kDefaultBase;
    bool json = false;
    bool csv = false;
};

struct CommandError : std::runtime_error {
    int exit_code;
    CommandError(int code, const std::string& msg)
        : std::runtime_error(msg), exit_code(code) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError(kExitUsage, "file-not-found: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CommandError(kExitUsage, "cannot write: " + out_path);
    out << content;
}

fx::Graph load_graph(const Options& opt, const std::vector<std::string>& extra_files) {
    fx::Graph g;
    std::vector<std::string> files = opt.data_files;
    files.insert(files.end(), extra_files.begin(), extra_files.end());
    if (files.empty()) {
        throw CommandError(kExitUsage, "no data: pass input files or --data <file>");
    }
    for (const auto& path : files) {
        for (const fx::Triple& t : fx::parse_turtle(read_file(path), opt.base_iri)) {
            g.insert(t);
        }
    }
    return g;
}

fx::Term resolve_one_subject(const std::string& text, const fx::Schema& schema) {
    auto hits = fx::resolve_subject(text, schema);
    if (hits.empty()) {
        throw CommandError(kExitUsage, "no subject matches \"" + text + "\"");
    }
    if (hits.size() > 1) {
        std::string msg = "\"" + text + "\" is ambiguous:";
        for (const auto& t : hits) msg += " " + t.text();
        throw CommandError(kExitUsage, msg);
    }
    return hits.front();
}

fx::Term resolve_one_individual(const std::string& text, const fx::Schema& schema,
                                const fx::GraphView& view) {
    auto hits = fx::resolve_individual(text, schema, view);
    if (hits.empty()) {
        throw CommandError(kExitUsage, "no individual matches \"" + text + "\"");
    }
    if (hits.size() > 1) {
        std::string msg = "\"" + text + "\" is ambiguous:";
        for (const auto& t : hits) msg += " " + t.text();
        throw CommandError(kExitUsage, msg);
    }
    return hits.front();
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string export_dot(const fx::Graph& g, const fx::Schema& schema) {
    fx::GraphView view{&g, nullptr};
    std::map<fx::Term, std::string> ids;
    for (const fx::Triple& t : g.triples()) {
        for (const fx::Term* term : {&t.subject, &t.object}) {
            ids.emplace(*term, "");
        }
    }
    int n = 0;
    for (auto& [term, id] : ids) id = "n" + std::to_string(n++);

    std::string out = "digraph fx {\n  rankdir=LR;\n  node [fontsize=10];\n";
    for (const auto& [term, id] : ids) {
        std::string shape = term.is_literal() ? "note" : "ellipse";
        if (term.is_iri() && schema.has_class(term.text())) shape = "box";
        out += "  " + id + " [label=\"" +
               dot_escape(fx::display_label(term, schema, view)) + "\", shape=" + shape +
               "];\n";
    }
    for (const fx::Triple& t : g.triples()) {
        out += "  " + ids[t.subject] + " -> " + ids[t.object] + " [label=\"" +
               dot_escape(t.predicate.local_name()) + "\"];\n";
    }
    out += "}\n";
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"fx: faculty expertise knowledge-graph toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--data", opt.data_files, "Turtle data file (repeatable)")
        ->type_name("FILE");
    app.add_option("--base-iri", opt.base_iri, "Base namespace for schema and data")
        ->envname("FX_BASE_IRI");
    app.add_flag("--json", opt.json, "Emit JSON on stdout");
    app.add_flag("--csv", opt.csv, "Emit CSV on stdout");

    // load
    auto* cmd_load = app.add_subcommand("load", "Parse, merge, and reserialize data files");
    std::vector<std::string> load_files;
    std::string load_out;
    cmd_load->add_option("files", load_files, "input .ttl files")->required();
    cmd_load->add_option("--out", load_out, "write merged Turtle here (default stdout)");

    // ingest-csv
    auto* cmd_ingest = app.add_subcommand("ingest-csv", "Turn a faculty directory CSV into triples");
    std::string ingest_file, ingest_map, ingest_out;
    cmd_ingest->add_option("file", ingest_file, "input .csv file")->required();
    cmd_ingest->add_option("--map", ingest_map, "column mapping JSON")->required();
    cmd_ingest->add_option("--out", ingest_out, "write Turtle here (default stdout)");

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "Check data against the schema");
    std::vector<std::string> validate_files;
    bool validate_strict = false, validate_asserted_only = false;
    cmd_validate->add_option("files", validate_files, "input .ttl files");
    cmd_validate->add_flag("--strict", validate_strict, "exit 1 when errors are found");
    cmd_validate->add_flag("--asserted-only", validate_asserted_only,
                           "skip inference before checking");

    // infer
    auto* cmd_infer = app.add_subcommand("infer", "Materialize inferred triples");
    std::string infer_file, infer_out;
    bool infer_provenance = false;
    cmd_infer->add_option("file", infer_file, "input .ttl file")->required();
    cmd_infer->add_option("--out", infer_out, "write result here (default stdout)");
    cmd_infer->add_flag("--provenance", infer_provenance,
                        "list inferred triples with their rule ids");

    // query
    auto* cmd_query = app.add_subcommand("query", "Run a SELECT query over data");
    std::string query_data, query_file, query_text;
    bool query_no_inference = false;
    cmd_query->add_option("file", query_data, "data .ttl file");
    cmd_query->add_option("--query-file", query_file, "file holding the query");
    cmd_query->add_option("-q,--query", query_text, "query text inline");
    cmd_query->add_flag("--no-inference", query_no_inference,
                        "evaluate over asserted triples only");

    // experts
    auto* cmd_experts = app.add_subcommand("experts", "Find faculty for a subject");
    std::string experts_subject;
    bool experts_no_inference = false;
    cmd_experts->add_option("subject", experts_subject,
                            "subject label or local name, e.g. \"Quantum Mechanics\"")
        ->required();
    cmd_experts->add_flag("--no-inference", experts_no_inference,
                          "match asserted expertise only");

    // collaborators
    auto* cmd_collab = app.add_subcommand("collaborators", "List collaborators of a person");
    std::string collab_name;
    bool collab_suggested = false;
    cmd_collab->add_option("name", collab_name, "person name, local name, or slug")->required();
    cmd_collab->add_flag("--suggested", collab_suggested,
                         "derived suggestions instead of asserted links");

    // describe
    auto* cmd_describe = app.add_subcommand("describe", "Neighborhood of an individual");
    std::string describe_name;
    int describe_radius = 2;
    bool describe_no_inference = false;
    cmd_describe->add_option("name", describe_name, "individual to describe")->required();
    cmd_describe->add_option("--radius", describe_radius, "hop limit (default 2)")
        ->check(CLI::PositiveNumber);
    cmd_describe->add_flag("--no-inference", describe_no_inference,
                           "explore asserted triples only");

    // cq
    auto* cmd_cq = app.add_subcommand("cq", "Competency-question registry and harness");
    auto* cq_list = cmd_cq->add_subcommand("list", "List all questions");
    auto* cq_run = cmd_cq->add_subcommand("run", "Run all questions against golden answers");
    auto* cq_show = cmd_cq->add_subcommand("show", "Show one question in full");
    std::string cq_golden_dir = "fixtures/golden";
    bool cq_no_inference = false;
    std::string cq_show_id;
    cq_run->add_option("--golden", cq_golden_dir, "golden answer directory");
    cq_run->add_flag("--no-inference", cq_no_inference, "disable inference for all questions");
    cq_show->add_option("id", cq_show_id, "question id, e.g. CQ5")->required();
    cmd_cq->require_subcommand(1);

    // export
    auto* cmd_export = app.add_subcommand("export", "Export to external formats");
    auto* export_dot_cmd = cmd_export->add_subcommand("dot", "Graphviz graph description");
    std::string export_file, export_out;
    export_dot_cmd->add_option("file", export_file, "input .ttl file")->required();
    export_dot_cmd->add_option("--out", export_out, "write DOT here (default stdout)");
    cmd_export->require_subcommand(1);

    // serve
    auto* cmd_serve = app.add_subcommand("serve", "Run the read-only HTTP/JSON service");
    int serve_port = 8080;
    cmd_serve->add_option("--port", serve_port, "TCP port (default 8080)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage-error: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return kExitUsage;
    }

    fx::Schema schema = fx::builtin_faculty_schema(opt.base_iri);

    auto materialized = [&](const std::vector<std::string>& extra) {
        return fx::materialize(load_graph(opt, extra), schema);
    };

    if (*cmd_load) {
        fx::Graph g = load_graph(opt, load_files);
        std::vector<fx::Triple> all(g.triples().begin(), g.triples().end());
        write_output(load_out, fx::write_turtle(all, schema.prefixes));
        std::cerr << "loaded " << all.size() << " triple(s)\n";
        return kExitOk;
    }

    if (*cmd_ingest) {
        fx::CsvRowMapping mapping = fx::mapping_from_json(read_file(ingest_map));
        fx::CsvIngestResult result = fx::ingest_csv(read_file(ingest_file), mapping, schema);
        for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
        write_output(ingest_out, fx::write_turtle(result.triples, schema.prefixes));
        std::cerr << "ingested " << result.triples.size() << " triple(s)\n";
        return kExitOk;
    }

    if (*cmd_validate) {
        fx::Graph g = load_graph(opt, validate_files);
        fx::ValidationReport report =
            validate_asserted_only ? fx::validate_asserted(g, schema)
                                   : fx::validate(fx::materialize(g, schema), schema);
        if (opt.json) {
            std::cout << report.to_json();
        } else if (opt.csv) {
            std::cout << "severity,code,subject,detail\n";
            for (const auto& f : report.findings) {
                std::cout << (f.severity == fx::Severity::Error ? "error" : "warning") << ","
                          << f.code << "," << fx::csv_field(f.subject.canonical()) << ","
                          << fx::csv_field(f.detail) << "\n";
            }
        } else {
            std::cout << report.to_text();
        }
        if (validate_strict && report.errors() > 0) return kExitFindings;
        return kExitOk;
    }

    if (*cmd_infer) {
        fx::MaterializedGraph m = materialized({infer_file});
        if (opt.json) {
            nlohmann::ordered_json j;
            j["asserted"] = m.asserted.size();
            j["inferred"] = nlohmann::ordered_json::array();
            for (const fx::Triple& t : m.inferred.triples()) {
                j["inferred"].push_back({{"subject", t.subject.canonical()},
                                         {"predicate", t.predicate.canonical()},
                                         {"object", t.object.canonical()},
                                         {"rule", fx::rule_name(m.provenance.at(t))}});
            }
            write_output(infer_out, j.dump(2) + "\n");
        } else if (infer_provenance) {
            std::string out;
            for (const fx::Triple& t : m.inferred.triples()) {
                out += t.subject.canonical() + " " + t.predicate.canonical() + " " +
                       t.object.canonical() + " . # " + fx::rule_name(m.provenance.at(t)) +
                       "\n";
            }
            write_output(infer_out, out);
        } else {
            std::vector<fx::Triple> all(m.asserted.triples().begin(),
                                        m.asserted.triples().end());
            all.insert(all.end(), m.inferred.triples().begin(), m.inferred.triples().end());
            write_output(infer_out, fx::write_turtle(all, schema.prefixes));
        }
        std::cerr << "asserted " << m.asserted.size() << ", inferred " << m.inferred.size()
                  << "\n";
        return kExitOk;
    }

    if (*cmd_query) {
        if (query_text.empty() == query_file.empty()) {
            throw CommandError(kExitUsage, "pass exactly one of -q or --query-file");
        }
        std::string text = query_text.empty() ? read_file(query_file) : query_text;
        std::vector<std::string> extra;
        if (!query_data.empty()) extra.push_back(query_data);
        fx::MaterializedGraph m = materialized(extra);
        if (opt.json) {
            std::cout << fx::query_json(m, text, !query_no_inference);
        } else {
            fx::QueryAst ast = fx::parse_query(text);
            auto solutions = fx::evaluate(ast, m.view(!query_no_inference));
            std::cout << (opt.csv ? fx::solutions_csv(ast, solutions)
                                  : fx::solutions_table(ast, solutions));
        }
        return kExitOk;
    }

    if (*cmd_experts) {
        fx::MaterializedGraph m = materialized({});
        fx::Term subject = resolve_one_subject(experts_subject, schema);
        bool inference = !experts_no_inference;
        if (opt.json) {
            std::cout << fx::experts_json(m, schema, subject, inference);
            return kExitOk;
        }
        auto records = fx::find_experts(m, schema, subject, inference);
        if (opt.csv) {
            std::cout << "name,department,email,specializations\n";
            for (const auto& r : records) {
                std::string specs;
                for (size_t i = 0; i < r.specializations.size(); ++i) {
                    if (i) specs += "; ";
                    specs += r.specializations[i];
                }
                std::cout << fx::csv_field(r.name) << "," << fx::csv_field(r.department)
                          << "," << fx::csv_field(r.email) << "," << fx::csv_field(specs)
                          << "\n";
            }
            return kExitOk;
        }
        std::cout << "Name | Department | Email | Specialization\n";
        for (const auto& r : records) {
            std::string specs;
            for (size_t i = 0; i < r.specializations.size(); ++i) {
                if (i) specs += ", ";
                specs += r.specializations[i];
            }
            std::cout << r.name << " | " << r.department << " | " << r.email << " | "
                      << specs << "\n";
        }
        std::cerr << records.size() << " expert(s)\n";
        return kExitOk;
    }

    if (*cmd_collab) {
        fx::MaterializedGraph m = materialized({});
        fx::Term person = resolve_one_individual(collab_name, schema, m.view(true));
        if (opt.json) {
            std::cout << fx::collaborators_json(m, schema, person, collab_suggested);
            return kExitOk;
        }
        auto records = fx::find_collaborators(m, schema, person, collab_suggested);
        if (opt.csv) {
            std::cout << "name,iri\n";
            for (const auto& r : records) {
                std::cout << fx::csv_field(r.name) << "," << fx::csv_field(r.person.text())
                          << "\n";
            }
            return kExitOk;
        }
        for (const auto& r : records) std::cout << r.name << "  (" << r.person.text() << ")\n";
        std::cerr << records.size() << " collaborator(s)\n";
        return kExitOk;
    }

    if (*cmd_describe) {
        fx::MaterializedGraph m = materialized({});
        fx::Term center = resolve_one_individual(describe_name, schema, m.view(true));
        auto triples =
            fx::neighborhood(m.view(!describe_no_inference), center, describe_radius);
        if (opt.json) {
            nlohmann::ordered_json j;
            j["center"] = center.canonical();
            j["radius"] = describe_radius;
            j["triples"] = nlohmann::ordered_json::array();
            for (const fx::Triple& t : triples) {
                j["triples"].push_back(
                    {t.subject.canonical(), t.predicate.canonical(), t.object.canonical()});
            }
            std::cout << j.dump(2) + "\n";
        } else if (opt.csv) {
            std::cout << "subject,predicate,object\n";
            for (const fx::Triple& t : triples) {
                std::cout << fx::csv_field(t.subject.canonical()) << ","
                          << fx::csv_field(t.predicate.canonical()) << ","
                          << fx::csv_field(t.object.canonical()) << "\n";
            }
        } else {
            for (const fx::Triple& t : triples) {
                std::cout << t.subject.canonical() << "  " << t.predicate.canonical() << "  "
                          << t.object.canonical() << "\n";
            }
            std::cerr << triples.size() << " triple(s) within radius " << describe_radius
                      << " of " << center.text() << "\n";
        }
        return kExitOk;
    }

    if (*cmd_cq) {
        if (*cq_list) {
            for (const auto& q : fx::competency_questions(schema)) {
                std::cout << q.id << (q.needs_inference ? "  [inference]  " : "  [asserted]   ")
                          << q.prose << "\n";
            }
            return kExitOk;
        }
        if (*cq_show) {
            for (const auto& q : fx::competency_questions(schema)) {
                if (q.id != cq_show_id) continue;
                std::cout << q.id << ": " << q.prose << "\n";
                std::cout << "needs_inference: " << (q.needs_inference ? "yes" : "no") << "\n";
                if (!q.note.empty()) std::cout << "note: " << q.note << "\n";
                for (const auto& [k, v] : q.params) {
                    std::cout << "param " << k << " = " << v << "\n";
                }
                std::cout << "\n" << q.template_text;
                return kExitOk;
            }
            throw CommandError(kExitUsage, "unknown-cq-id: " + cq_show_id);
        }
        fx::Graph g = load_graph(opt, {});
        fx::CqReport report = fx::run_all(g, schema, cq_golden_dir, cq_no_inference);
        if (opt.json) {
            std::cout << report.to_json();
        } else if (opt.csv) {
            std::cout << "id,solutions,pass\n";
            for (const auto& q : report.questions) {
                std::cout << q.id << "," << q.solutions << "," << (q.passed ? "true" : "false")
                          << "\n";
            }
        } else {
            std::cout << report.to_text();
        }
        return report.passed() == report.total() ? kExitOk : kExitFindings;
    }

    if (*cmd_export) {
        fx::Graph g = load_graph(opt, {export_file});
        write_output(export_out, export_dot(g, schema));
        return kExitOk;
    }

    if (*cmd_serve) {
        fx::MaterializedGraph m = materialized({});
        fx::ExpertService service(std::move(m), schema);
        int port = service.start(serve_port);
        std::cerr << "serving on port " << port << " (Ctrl-C to stop)\n";
        for (;;) std::this_thread::sleep_for(std::chrono::hours(1));
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CommandError& e) {
        std::cerr << e.what() << "\n";
        return e.exit_code;
    } catch (const fx::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const fx::CsvError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

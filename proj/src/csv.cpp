// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/csv.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include <json.hpp>

#include "fx/labels.hpp"

namespace fx {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// RFC-4180 field splitting; records may span lines inside quotes.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;

    // Tolerate a UTF-8 BOM.
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                row_started = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                row_started = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_started || !field.empty()) {
                    row.push_back(std::move(field));
                    field.clear();
                    rows.push_back(std::move(row));
                    row.clear();
                    row_started = false;
                }
                break;
            default:
                field.push_back(c);
                row_started = true;
        }
    }
    if (row_started || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> split_list(const std::string& cell, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : cell) {
        if (c == sep) {
            if (!trim(cur).empty()) out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

}  // namespace

CsvIngestResult ingest_csv(std::string_view text, const CsvRowMapping& mapping,
                           const Schema& schema) {
    if (mapping.name_col.empty() || mapping.department_col.empty()) {
        throw CsvError("missing-column: name and department columns are required");
    }

    auto rows = parse_csv(text);
    if (rows.empty()) throw CsvError("missing-column: no header row");

    const auto& header = rows.front();
    std::map<std::string, size_t> columns;
    for (size_t i = 0; i < header.size(); ++i) {
        std::string name = trim(header[i]);
        if (columns.count(name)) {
            throw CsvError("duplicate-header: column \"" + name + "\" appears twice");
        }
        columns[name] = i;
    }

    auto column_index = [&](const std::string& col, bool required) -> std::optional<size_t> {
        if (col.empty()) return std::nullopt;
        auto it = columns.find(col);
        if (it == columns.end()) {
            if (required) {
                throw CsvError("missing-column: \"" + col + "\" not in header");
            }
            return std::nullopt;
        }
        return it->second;
    };

    auto name_ix = column_index(mapping.name_col, true);
    auto dept_ix = column_index(mapping.department_col, true);
    auto email_ix = column_index(mapping.email_col, false);
    auto programs_ix = column_index(mapping.programs_col, false);
    auto expertise_ix = column_index(mapping.expertise_col, false);
    auto teaches_ix = column_index(mapping.teaches_col, false);

    CsvIngestResult result;
    std::set<Triple> seen;
    auto emit = [&](Triple t) {
        if (seen.insert(t).second) result.triples.push_back(std::move(t));
    };

    const Term rdf_type = Term::iri(vocab::kRdfType);
    const Term has_name = schema.resolve_term("hasName");
    const Term has_email = schema.resolve_term("hasEmail");
    const Term belongs_to = schema.resolve_term("belongsToDepartment");
    const Term teaches_in = schema.resolve_term("teachesIn");
    const Term has_expertise = schema.resolve_term("hasExpertiseIn");
    const Term teaches = schema.resolve_term("teaches");
    const Term subject_area = schema.resolve_term("SubjectArea");
    const Term academic_program = schema.resolve_term("AcademicProgram");

    // Subject cells resolve to schema classes when a label or local name
    // matches; anything else mints a SubjectArea-typed individual once.
    std::set<std::string> minted;
    auto subject_term = [&](const std::string& value, size_t row_no) {
        auto hits = resolve_subject(value, schema);
        if (hits.size() == 1) return hits.front();
        Term t = make_iri(schema.base, slugify(value));
        if (minted.insert(t.text()).second) {
            result.warnings.push_back("row " + std::to_string(row_no) +
                                      ": unknown subject \"" + value +
                                      "\" minted as new subject area " + t.text());
            emit(Triple(t, rdf_type, subject_area));
        }
        return t;
    };

    std::set<std::string> seen_slugs;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const size_t row_no = r + 1;  // 1-based, counting the header
        if (row.size() != header.size()) {
            result.warnings.push_back("row " + std::to_string(row_no) +
                                      ": expected " + std::to_string(header.size()) +
                                      " fields, got " + std::to_string(row.size()) +
                                      "; row skipped");
            continue;
        }
        std::string name = trim(row[*name_ix]);
        if (name.empty()) {
            result.warnings.push_back("row " + std::to_string(row_no) +
                                      ": empty name; row skipped");
            continue;
        }
        std::string slug = slugify(name);
        if (slug.empty()) {
            result.warnings.push_back("row " + std::to_string(row_no) +
                                      ": name \"" + name + "\" yields an empty slug; row skipped");
            continue;
        }
        if (!seen_slugs.insert(slug).second) {
            result.warnings.push_back("row " + std::to_string(row_no) + ": duplicate name slug \"" +
                                      slug + "\"; triples merged into the same subject");
        }
        Term person = make_iri(schema.base, slug);
        emit(Triple(person, has_name, Term::literal(name)));

        std::string dept = trim(row[*dept_ix]);
        if (dept.empty()) {
            result.warnings.push_back("row " + std::to_string(row_no) +
                                      ": empty department for \"" + name + "\"");
        } else {
            emit(Triple(person, belongs_to, make_iri(schema.base, slugify(dept))));
        }

        if (email_ix) {
            std::string email = trim(row[*email_ix]);
            if (!email.empty()) emit(Triple(person, has_email, Term::literal(email)));
        }
        if (programs_ix) {
            for (const auto& p : split_list(row[*programs_ix], mapping.list_separator)) {
                Term program = make_iri(schema.base, slugify(p));
                emit(Triple(person, teaches_in, program));
                emit(Triple(program, rdf_type, academic_program));
            }
        }
        if (expertise_ix) {
            for (const auto& e : split_list(row[*expertise_ix], mapping.list_separator)) {
                emit(Triple(person, has_expertise, subject_term(e, row_no)));
            }
        }
        if (teaches_ix) {
            for (const auto& s : split_list(row[*teaches_ix], mapping.list_separator)) {
                emit(Triple(person, teaches, subject_term(s, row_no)));
            }
        }
    }
    return result;
}

CsvRowMapping mapping_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    CsvRowMapping m;
    m.name_col = j.value("name_col", "");
    m.email_col = j.value("email_col", "");
    m.department_col = j.value("department_col", "");
    m.programs_col = j.value("programs_col", "");
    m.expertise_col = j.value("expertise_col", "");
    m.teaches_col = j.value("teaches_col", "");
    std::string sep = j.value("list_separator", ";");
    if (sep.size() != 1) {
        throw CsvError("list_separator must be a single character");
    }
    m.list_separator = sep[0];
    return m;
}

}  // namespace fx

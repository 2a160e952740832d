// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fx/schema.hpp"
#include "fx/term.hpp"

namespace fx {

// Column mapping for a faculty-directory CSV. Name and department columns
// are required; the rest are optional (empty = unmapped). Cells in the
// programs/expertise/teaches columns hold lists split on `list_separator`.
struct CsvRowMapping {
    std::string name_col;
    std::string email_col;
    std::string department_col;
    std::string programs_col;
    std::string expertise_col;
    std::string teaches_col;
    char list_separator = ';';
};

// Structural CSV problems that stop ingestion: missing-column,
// duplicate-header, empty input.
struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CsvIngestResult {
    std::vector<Triple> triples;
    std::vector<std::string> warnings;  // skipped rows, merges, minted subjects
};

// RFC-4180-style parsing (quoted fields, "" escapes, embedded newlines),
// header row required. Per row: mints a faculty IRI from the slug of the
// name, emits hasName / belongsToDepartment / hasEmail and one triple per
// list entry in the program/expertise/teaches columns. Subject values are
// resolved against schema classes case-insensitively; unknown ones mint
// SubjectArea-typed individuals with a warning. Malformed rows are skipped
// with a warning carrying the row number.
CsvIngestResult ingest_csv(std::string_view text, const CsvRowMapping& mapping,
                           const Schema& schema);

// Reads a mapping from JSON with keys name_col, email_col, department_col,
// programs_col, expertise_col, teaches_col, list_separator.
CsvRowMapping mapping_from_json(const std::string& json_text);

}  // namespace fx

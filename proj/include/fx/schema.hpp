// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fx/term.hpp"

namespace fx {

namespace vocab {

// Reserved vocabulary shared by every graph regardless of base namespace.
inline constexpr const char* kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr const char* kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr const char* kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr const char* kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr const char* kXsdNs = "http://www.w3.org/2001/XMLSchema#";

}  // namespace vocab

// Default base namespace for schema and instance IRIs. Overridable via
// --base-iri / FX_BASE_IRI on the CLI.
inline constexpr const char* kDefaultBase = "https://example.org/fx#";

enum class ClassLevel { Root, Top, Middle, Bottom };

struct ClassDef {
    std::string iri;
    std::set<std::string> parents;  // class IRIs
    ClassLevel level = ClassLevel::Bottom;
    std::string label;
    std::string comment;

    friend bool operator==(const ClassDef&, const ClassDef&) = default;
};

enum class PropertyKind { Object, Data };

struct PropertyDef {
    std::string iri;
    PropertyKind kind = PropertyKind::Object;
    std::string domain;  // class IRI
    std::string range;   // class IRI (object) or datatype IRI (data)
    std::uint32_t min_card = 0;
    std::optional<std::uint32_t> max_card;  // nullopt = unbounded
    std::optional<std::string> inverse_of;
    std::string label;

    friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

// The ontology TBox: class and property definitions plus prefix table.
struct Schema {
    std::string base;  // namespace all local names resolve against
    std::map<std::string, ClassDef> classes;      // keyed by IRI
    std::map<std::string, PropertyDef> properties;  // keyed by IRI
    std::map<std::string, std::string> prefixes;  // prefix -> namespace IRI

    bool has_class(const std::string& iri) const { return classes.count(iri) > 0; }
    bool has_property(const std::string& iri) const { return properties.count(iri) > 0; }
    const ClassDef* find_class(const std::string& iri) const;
    const PropertyDef* find_property(const std::string& iri) const;

    // base + local, e.g. resolve("FacultyMember").
    std::string resolve(std::string_view local) const;
    Term resolve_term(std::string_view local) const { return Term::iri(resolve(local)); }

    // Checks referential closure (domains, ranges, parents, inverses) and
    // that exactly one root class exists. Throws std::logic_error on
    // violation; used to guard construction paths.
    void check_integrity() const;

    friend bool operator==(const Schema&, const Schema&) = default;
};

// The faculty-expertise ontology: Thing at the root; FacultyMember,
// Department, AcademicProgram and SubjectArea below it; degree levels and
// disciplines in the middle tier; specializations at the bottom; the eight
// properties linking people to departments, programs and subjects.
Schema builtin_faculty_schema(const std::string& base = kDefaultBase);

// Direct subclass edges of the schema as rdfs:subClassOf triples, so the
// class hierarchy itself is queryable alongside instance data.
std::vector<Triple> schema_triples(const Schema& schema);

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/schema.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace fx {

const ClassDef* Schema::find_class(const std::string& iri) const {
    auto it = classes.find(iri);
    return it == classes.end() ? nullptr : &it->second;
}

const PropertyDef* Schema::find_property(const std::string& iri) const {
    auto it = properties.find(iri);
    return it == properties.end() ? nullptr : &it->second;
}

std::string Schema::resolve(std::string_view local) const {
    std::string out = base;
    out.append(local);
    return out;
}

void Schema::check_integrity() const {
    int roots = 0;
    for (const auto& [iri, cls] : classes) {
        if (cls.level == ClassLevel::Root) ++roots;
        for (const auto& parent : cls.parents) {
            if (!has_class(parent)) {
                throw std::logic_error("schema: unresolved parent " + parent + " of " + iri);
            }
        }
    }
    if (roots != 1) {
        throw std::logic_error("schema: expected exactly one root class");
    }
    for (const auto& [iri, prop] : properties) {
        if (!has_class(prop.domain)) {
            throw std::logic_error("schema: unresolved domain of " + iri);
        }
        const bool class_range = has_class(prop.range);
        const bool datatype_range = prop.range == vocab::kXsdString;
        if (prop.kind == PropertyKind::Object ? !class_range : !datatype_range) {
            throw std::logic_error("schema: bad range of " + iri);
        }
        if (prop.max_card && prop.min_card > *prop.max_card) {
            throw std::logic_error("schema: min_card > max_card on " + iri);
        }
        if (prop.inverse_of && !has_property(*prop.inverse_of)) {
            throw std::logic_error("schema: unresolved inverse of " + iri);
        }
    }
}

namespace {

// Splits CamelCase local names into words: "QuantumMechanics" -> "Quantum Mechanics",
// "MScPhysics" -> "MSc Physics".
std::string camel_label(std::string_view local) {
    std::string out;
    for (size_t i = 0; i < local.size(); ++i) {
        if (i > 0 && std::isupper(static_cast<unsigned char>(local[i])) &&
            std::islower(static_cast<unsigned char>(local[i - 1]))) {
            out.push_back(' ');
        }
        out.push_back(local[i]);
    }
    return out;
}

}  // namespace

Schema builtin_faculty_schema(const std::string& base) {
    Schema s;
    s.base = base;
    s.prefixes = {
        {"fx", base},
        {"rdf", vocab::kRdfNs},
        {"rdfs", vocab::kRdfsNs},
        {"xsd", vocab::kXsdNs},
    };

    auto add_class = [&](std::string_view local, ClassLevel level,
                         std::vector<std::string> parent_locals,
                         std::string comment = "") {
        ClassDef def;
        def.iri = s.resolve(local);
        def.level = level;
        def.label = camel_label(local);
        def.comment = std::move(comment);
        for (const auto& p : parent_locals) def.parents.insert(s.resolve(p));
        s.classes.emplace(def.iri, std::move(def));
    };

    add_class("Thing", ClassLevel::Root, {}, "Universal class.");
    add_class("FacultyMember", ClassLevel::Top, {"Thing"},
              "A member of the teaching or research staff.");
    add_class("Department", ClassLevel::Top, {"Thing"},
              "An organizational unit faculty belong to.");
    add_class("AcademicProgram", ClassLevel::Top, {"Thing"},
              "A degree program faculty teach in.");
    add_class("SubjectArea", ClassLevel::Top, {"Thing"},
              "A discipline or specialization faculty work on.");

    for (const char* degree : {"BTech", "MTech", "BSc", "MSc"}) {
        add_class(degree, ClassLevel::Middle, {"AcademicProgram"});
    }

    for (const char* discipline :
         {"ComputerScience", "Mathematics", "Physics", "Chemistry",
          "EnvironmentalScience", "CivilEngineering", "MechanicalEngineering",
          "Biotechnology"}) {
        add_class(discipline, ClassLevel::Middle, {"SubjectArea"});
    }

    auto specialization = [&](std::string_view local, const char* discipline) {
        add_class(local, ClassLevel::Bottom, {discipline});
    };
    specialization("ArtificialIntelligence", "ComputerScience");
    specialization("DataMining", "ComputerScience");
    specialization("DataStructures", "ComputerScience");
    specialization("Cryptography", "ComputerScience");
    specialization("DataScience", "ComputerScience");
    specialization("Calculus", "Mathematics");
    specialization("AppliedMathematics", "Mathematics");
    specialization("QuantumMechanics", "Physics");
    specialization("Optics", "Physics");
    specialization("Thermodynamics", "Physics");
    specialization("FluidMechanics", "Physics");
    specialization("OrganicChemistry", "Chemistry");
    specialization("PlantGenetics", "Biotechnology");

    auto add_property = [&](std::string_view local, PropertyKind kind,
                            std::string_view domain_local, std::string range_iri,
                            std::uint32_t min_card, std::optional<std::uint32_t> max_card,
                            std::optional<std::string> inverse_local = std::nullopt) {
        PropertyDef def;
        def.iri = s.resolve(local);
        def.kind = kind;
        def.domain = s.resolve(domain_local);
        def.range = std::move(range_iri);
        def.min_card = min_card;
        def.max_card = max_card;
        def.label = camel_label(local);
        if (inverse_local) def.inverse_of = s.resolve(*inverse_local);
        s.properties.emplace(def.iri, std::move(def));
    };

    add_property("belongsToDepartment", PropertyKind::Object, "FacultyMember",
                 s.resolve("Department"), 1, std::nullopt, "hasFacultyMember");
    add_property("hasFacultyMember", PropertyKind::Object, "Department",
                 s.resolve("FacultyMember"), 0, std::nullopt, "belongsToDepartment");
    add_property("teachesIn", PropertyKind::Object, "FacultyMember",
                 s.resolve("AcademicProgram"), 0, std::nullopt);
    add_property("hasExpertiseIn", PropertyKind::Object, "FacultyMember",
                 s.resolve("SubjectArea"), 0, std::nullopt);
    add_property("teaches", PropertyKind::Object, "FacultyMember",
                 s.resolve("SubjectArea"), 0, std::nullopt);
    add_property("collaboratesWith", PropertyKind::Object, "FacultyMember",
                 s.resolve("FacultyMember"), 0, std::nullopt);
    add_property("hasName", PropertyKind::Data, "FacultyMember", vocab::kXsdString,
                 1, 1);
    add_property("hasEmail", PropertyKind::Data, "FacultyMember", vocab::kXsdString,
                 0, 1);

    s.check_integrity();
    return s;
}

std::vector<Triple> schema_triples(const Schema& schema) {
    std::vector<Triple> out;
    Term sub_class_of = Term::iri(vocab::kRdfsSubClassOf);
    for (const auto& [iri, cls] : schema.classes) {
        for (const auto& parent : cls.parents) {
            out.emplace_back(Term::iri(iri), sub_class_of, Term::iri(parent));
        }
    }
    return out;
}

}  // namespace fx

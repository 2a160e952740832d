// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/labels.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace fx {

namespace {

std::vector<std::string> split_words(std::string_view local) {
    std::vector<std::string> words;
    std::string cur;
    for (size_t i = 0; i < local.size(); ++i) {
        char c = local[i];
        if (c == '-' || c == '_' || c == ' ') {
            if (!cur.empty()) words.push_back(std::exchange(cur, {}));
            continue;
        }
        if (!cur.empty() && std::isupper(static_cast<unsigned char>(c)) &&
            std::islower(static_cast<unsigned char>(local[i - 1]))) {
            words.push_back(std::exchange(cur, {}));
        }
        cur.push_back(c);
    }
    if (!cur.empty()) words.push_back(cur);
    return words;
}

bool all_lower(const std::string& w) {
    return std::all_of(w.begin(), w.end(), [](unsigned char c) {
        return !std::isalpha(c) || std::islower(c);
    });
}

}  // namespace

std::string humanize_local(std::string_view local) {
    std::string out;
    for (auto& word : split_words(local)) {
        if (all_lower(word)) word[0] = static_cast<char>(std::toupper(
            static_cast<unsigned char>(word[0])));
        if (!out.empty()) out.push_back(' ');
        out += word;
    }
    return out;
}

std::string slugify(std::string_view text) {
    std::string out;
    bool pending_dash = false;
    for (const std::string& word : split_words(text)) {
        for (char c : word) {
            if (std::isalnum(static_cast<unsigned char>(c))) {
                if (pending_dash && !out.empty()) out.push_back('-');
                pending_dash = false;
                out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
            }
        }
        pending_dash = true;
    }
    return out;
}

bool ci_equal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

std::string display_label(const Term& t, const Schema& schema, const GraphView& g) {
    if (t.is_literal()) return t.text();
    if (t.is_blank()) return "_:" + t.text();
    if (const ClassDef* cls = schema.find_class(t.text())) return cls->label;
    if (const PropertyDef* prop = schema.find_property(t.text())) return prop->label;
    Term has_name = schema.resolve_term("hasName");
    auto names = g.match(TriplePattern(t, has_name, std::nullopt));
    if (!names.empty() && names.front().object.is_literal()) {
        return names.front().object.text();
    }
    return humanize_local(t.local_name());
}

std::vector<Term> resolve_subject(const std::string& text, const Schema& schema) {
    std::vector<Term> hits;
    for (const auto& [iri, cls] : schema.classes) {
        Term t = Term::iri(iri);
        if (ci_equal(text, cls.label) || ci_equal(text, t.local_name())) {
            hits.push_back(std::move(t));
        }
    }
    return hits;
}

std::vector<Term> resolve_individual(const std::string& text, const Schema& schema,
                                     const GraphView& g) {
    const std::string wanted_slug = slugify(text);
    Term has_name = schema.resolve_term("hasName");

    std::set<Term> individuals;
    auto consider = [&](const Term& t) {
        if (!t.is_iri() && !t.is_blank()) return;
        if (t.is_iri() && (schema.has_class(t.text()) || schema.has_property(t.text()))) {
            return;
        }
        individuals.insert(t);
    };
    for (const Graph* part : {g.asserted, g.inferred}) {
        if (!part) continue;
        for (const Triple& t : part->triples()) {
            consider(t.subject);
            if (t.predicate.text() != vocab::kRdfType) consider(t.object);
        }
    }

    std::vector<Term> hits;
    for (const Term& t : individuals) {
        std::string local = t.local_name();
        std::string human = humanize_local(local);
        std::string name;
        auto names = g.match(TriplePattern(t, has_name, std::nullopt));
        if (!names.empty() && names.front().object.is_literal()) {
            name = names.front().object.text();
        }
        bool match = ci_equal(text, local) || ci_equal(text, human) ||
                     (!name.empty() && ci_equal(text, name));
        if (!match && !wanted_slug.empty()) {
            match = wanted_slug == slugify(human) ||
                    (!name.empty() && wanted_slug == slugify(name));
        }
        if (match) hits.push_back(t);
    }
    return hits;
}

}  // namespace fx

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#include "fx/service.hpp"

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "fx/labels.hpp"
#include "fx/lookup.hpp"

namespace fx {

namespace {

using nlohmann::ordered_json;

std::string error_body(const std::string& error, const std::string& detail) {
    ordered_json j;
    j["error"] = error;
    j["detail"] = detail;
    return j.dump(2) + "\n";
}

bool parse_bool(const std::string& raw, bool fallback) {
    if (raw == "true" || raw == "1") return true;
    if (raw == "false" || raw == "0") return false;
    return fallback;
}

}  // namespace

struct ExpertService::Impl {
    MaterializedGraph graph;
    Schema schema;
    httplib::Server server;
    std::thread worker;

    Impl(MaterializedGraph g, Schema s) : graph(std::move(g)), schema(std::move(s)) {
        // Only SO_REUSEADDR: the httplib default adds SO_REUSEPORT, which
        // would let two instances share a port instead of failing loudly.
        server.set_socket_options([](auto sock) {
            int opt = 1;
            setsockopt(sock, SOL_SOCKET, SO_REUSEADDR,
                       reinterpret_cast<const void*>(&opt), sizeof(opt));
        });
        route();
    }

    void reply_json(httplib::Response& res, int status, const std::string& body) {
        res.status = status;
        res.set_content(body, "application/json");
    }

    // Resolves one individual or replies 404/400; nullopt means handled.
    std::optional<Term> individual_or_reply(const std::string& text,
                                            httplib::Response& res) {
        auto hits = resolve_individual(text, schema, graph.view(true));
        if (hits.empty()) {
            reply_json(res, 404, error_body("not-found", "no individual matches \"" + text + "\""));
            return std::nullopt;
        }
        if (hits.size() > 1) {
            std::string detail = "\"" + text + "\" is ambiguous:";
            for (const Term& t : hits) detail += " " + t.text();
            reply_json(res, 400, error_body("ambiguous", detail));
            return std::nullopt;
        }
        return hits.front();
    }

    void route() {
        server.Get("/health", [this](const httplib::Request&, httplib::Response& res) {
            ordered_json j;
            j["status"] = "ok";
            j["triples"] = graph.asserted.size();
            reply_json(res, 200, j.dump(2) + "\n");
        });

        server.Get("/experts", [this](const httplib::Request& req, httplib::Response& res) {
            if (!req.has_param("subject")) {
                reply_json(res, 400, error_body("bad-request", "missing subject parameter"));
                return;
            }
            std::string subject = req.get_param_value("subject");
            bool inference = parse_bool(req.get_param_value("inference"), true);
            auto hits = resolve_subject(subject, schema);
            if (hits.empty()) {
                reply_json(res, 404,
                           error_body("not-found", "no subject matches \"" + subject + "\""));
                return;
            }
            if (hits.size() > 1) {
                std::string detail = "\"" + subject + "\" is ambiguous:";
                for (const Term& t : hits) detail += " " + t.text();
                reply_json(res, 400, error_body("ambiguous", detail));
                return;
            }
            reply_json(res, 200, experts_json(graph, schema, hits.front(), inference));
        });

        server.Get(R"(/faculty/(.+))", [this](const httplib::Request& req,
                                              httplib::Response& res) {
            auto person = individual_or_reply(req.matches[1], res);
            if (!person) return;
            reply_json(res, 200, profile_json(graph, schema, *person));
        });

        server.Get(R"(/collaborators/(.+))", [this](const httplib::Request& req,
                                                    httplib::Response& res) {
            auto person = individual_or_reply(req.matches[1], res);
            if (!person) return;
            bool suggested = parse_bool(req.get_param_value("suggested"), false);
            reply_json(res, 200, collaborators_json(graph, schema, *person, suggested));
        });

        server.Post("/query", [this](const httplib::Request& req, httplib::Response& res) {
            nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
            if (body.is_discarded() || !body.is_object() || !body.contains("query") ||
                !body["query"].is_string()) {
                reply_json(res, 400,
                           error_body("bad-request",
                                      "expected a JSON object with a \"query\" string"));
                return;
            }
            bool inference = body.value("inference", true);
            try {
                reply_json(res, 200, query_json(graph, body["query"], inference));
            } catch (const ParseError& e) {
                reply_json(res, 400, error_body(e.kind(), e.what()));
            } catch (const EvalError& e) {
                reply_json(res, 400, error_body("type-error", e.what()));
            }
        });
    }
};

ExpertService::ExpertService(MaterializedGraph graph, Schema schema)
    : impl_(std::make_unique<Impl>(std::move(graph), std::move(schema))) {}

ExpertService::~ExpertService() { stop(); }

int ExpertService::start(int port) {
    int bound = port;
    if (port == 0) {
        bound = impl_->server.bind_to_any_port("0.0.0.0");
        if (bound <= 0) throw std::runtime_error("port-in-use: could not bind any port");
    } else if (!impl_->server.bind_to_port("0.0.0.0", port)) {
        throw std::runtime_error("port-in-use: could not bind port " + std::to_string(port));
    }
    impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

void ExpertService::stop() {
    if (!impl_) return;
    impl_->server.stop();
    if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace fx

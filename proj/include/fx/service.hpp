// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fx contributors

#pragma once

#include <memory>
#include <string>

#include "fx/reasoner.hpp"

namespace fx {

// Read-only HTTP/JSON front end over a materialized graph.
//
//   GET  /health                              {"status":"ok","triples":n}
//   GET  /experts?subject=S&inference=bool    expert records for a subject
//   GET  /faculty/<slug>                      full profile with provenance
//   GET  /collaborators/<slug>?suggested=bool collaborator list
//   POST /query {"query":text,"inference":b}  {"head":vars,"results":rows}
//
// The graph is loaded once and never mutated; handlers are stateless and
// share the snapshot. JSON bodies are byte-identical to the corresponding
// CLI --json outputs.
class ExpertService {
public:
    ExpertService(MaterializedGraph graph, Schema schema);
    ~ExpertService();

    ExpertService(const ExpertService&) = delete;
    ExpertService& operator=(const ExpertService&) = delete;

    // Binds and serves on a background thread. port 0 picks a free port.
    // Returns the bound port; throws std::runtime_error("port-in-use: ...")
    // when binding fails.
    int start(int port);
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace fx

#pragma once

#include <optional>
#include <string>

#include "pgr/engine.hpp"
#include "pgr/lambda.hpp"
#include "pgr/logic.hpp"

namespace pgr {

enum class DocKind { proof, term, graph, trace };
std::string_view to_string(DocKind k);
DocKind doc_kind_from_string(std::string_view s);

// .prf proof, .lam term, .json graph or trace (a trace has a "steps" key).
DocKind guess_doc_kind(const std::string& path, std::string_view text);

struct Document {
    DocKind kind = DocKind::graph;
    PortGraph graph;               // translation, or the trace's final graph
    std::string catalogue;         // label of the catalogue that reduces it
    ProofPtr proof;                // kind == proof
    TermPtr term;                  // kind == term
    std::optional<Trace> trace;    // kind == trace
};

// Parses and translates. Proofs and graphs get the logic catalogue of `mode`,
// terms the lambda catalogue, traces their recorded one.
Document load_document(DocKind kind, std::string_view text, Mode mode = Mode::global);

// Short machine-readable code for an exception thrown by the library.
std::string error_code(const std::exception& e);

std::string read_file(const std::string& path);  // throws Error when unreadable

}  // namespace pgr

#include "pgr/document.hpp"

#include <fstream>
#include <sstream>

#include "pgr/parse.hpp"

namespace pgr {

std::string_view to_string(DocKind k) {
    switch (k) {
        case DocKind::proof: return "proof";
        case DocKind::term: return "term";
        case DocKind::graph: return "graph";
        case DocKind::trace: return "trace";
    }
    return "?";
}

DocKind doc_kind_from_string(std::string_view s) {
    if (s == "proof") return DocKind::proof;
    if (s == "term") return DocKind::term;
    if (s == "graph") return DocKind::graph;
    if (s == "trace") return DocKind::trace;
    throw Error("unknown document kind '" + std::string(s) + "' (expected proof, term, graph or trace)");
}

DocKind guess_doc_kind(const std::string& path, std::string_view text) {
    auto ends = [&](std::string_view ext) {
        return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
    };
    if (ends(".prf")) return DocKind::proof;
    if (ends(".lam")) return DocKind::term;
    if (ends(".json")) {
        Json doc = Json::parse(text, nullptr, false);
        return doc.is_object() && doc.contains("steps") ? DocKind::trace : DocKind::graph;
    }
    throw Error("cannot tell the document kind of '" + path + "' (use .prf, .lam or .json)");
}

Document load_document(DocKind kind, std::string_view text, Mode mode) {
    Document d;
    d.kind = kind;
    switch (kind) {
        case DocKind::proof:
            d.proof = parse_proof(text);
            check_proof(d.proof);
            d.graph = translate(d.proof);
            d.catalogue = std::string(RuleCatalogue::logic(mode).label());
            break;
        case DocKind::term:
            d.term = parse_term(text);
            d.graph = translate_term(d.term);
            d.catalogue = std::string(RuleCatalogue::lambda().label());
            break;
        case DocKind::graph:
            d.graph = graph_from_text(std::string(text));
            d.catalogue = std::string(RuleCatalogue::logic(mode).label());
            break;
        case DocKind::trace: {
            Json doc = Json::parse(text, nullptr, false);
            if (doc.is_discarded()) throw GraphError("trace is not valid JSON");
            d.trace = trace_from_json(doc);
            d.graph = d.trace->final_graph;
            d.catalogue = d.trace->catalogue;
            break;
        }
    }
    return d;
}

std::string error_code(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
    if (dynamic_cast<const LinearityError*>(&e)) return "linearity_error";
    if (dynamic_cast<const ProofError*>(&e)) return "proof_error";
    if (dynamic_cast<const RedexError*>(&e)) return "stale_id";
    if (dynamic_cast<const IntegrityError*>(&e)) return "integrity_error";
    if (dynamic_cast<const VerificationError*>(&e)) return "verification_error";
    if (dynamic_cast<const GraphError*>(&e)) return "graph_error";
    if (dynamic_cast<const Json::exception*>(&e)) return "bad_json";
    if (dynamic_cast<const Error*>(&e)) return "bad_request";
    return "internal_error";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "': file not found or unreadable");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pgr

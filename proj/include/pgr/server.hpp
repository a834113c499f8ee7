#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "pgr/document.hpp"
#include "pgr/engine.hpp"

namespace httplib {
class Server;
}

namespace pgr {

struct HttpReply {
    int status = 200;
    Json body;
};

// One reduction session behind the HTTP API. handle() is the whole API and
// can be driven without a socket; listen() serves it with httplib.
//
//   GET  /graph    current graph
//   GET  /redexes  available redexes
//   POST /step     {"redex_id": ...}
//   POST /undo
//   POST /load     {"kind": proof|term|graph|trace, "text": ..., "mode"?: ...}
//   GET  /trace    trace so far
//
// Errors are {"code", "message"} with status 400 (404 for unknown routes).
class Server {
public:
    explicit Server(Mode mode = Mode::global, std::size_t step_limit = 10000);
    ~Server();

    HttpReply handle(std::string_view method, std::string_view path, std::string_view body);

    // Blocking. port 0 picks a free port, reported by port() once bound.
    void listen(const std::string& host, int port);
    int port() const { return port_; }
    void stop();
    // Blocks until listen() is accepting connections.
    void wait_until_ready() const;

private:
    Json state() const;
    Json redex_list() const;

    mutable std::mutex mu_;
    Mode mode_;
    std::size_t step_limit_;
    std::optional<Session> session_;
    std::unique_ptr<httplib::Server> http_;
    int port_ = 0;
};

Json redex_to_json(const Redex& r);

}  // namespace pgr

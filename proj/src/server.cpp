#include "pgr/server.hpp"

#include <httplib.h>

namespace pgr {

namespace {

HttpReply fail(int status, std::string code, std::string message) {
    return {status, Json{{"code", std::move(code)}, {"message", std::move(message)}}};
}

}  // namespace

Json redex_to_json(const Redex& r) {
    return Json{{"id", r.id}, {"rule", r.rule}, {"footprint", r.footprint}};
}

Server::Server(Mode mode, std::size_t step_limit) : mode_(mode), step_limit_(step_limit) {}

Server::~Server() { stop(); }

Json Server::redex_list() const {
    Json out = Json::array();
    for (const auto& r : session_->redexes()) out.push_back(redex_to_json(r));
    return out;
}

Json Server::state() const {
    const PortGraph& g = session_->current();
    return Json{{"graph", graph_to_json(g)},
                {"hash", content_hash(g)},
                {"redexes", redex_list()},
                {"steps", session_->steps()},
                {"catalogue", std::string(session_->catalogue().label())}};
}

HttpReply Server::handle(std::string_view method, std::string_view path, std::string_view body) {
    std::lock_guard<std::mutex> lock(mu_);
    try {
        if (method == "POST" && path == "/load") {
            Json req = Json::parse(body);
            if (!req.is_object() || !req.contains("kind") || !req.contains("text"))
                return fail(400, "bad_request", "expected {\"kind\", \"text\"}");
            Mode mode = req.contains("mode") ? mode_from_string(req["mode"].get<std::string>()) : mode_;
            Document d = load_document(doc_kind_from_string(req["kind"].get<std::string>()),
                                       req["text"].get<std::string>(), mode);
            if (d.trace) {
                // Re-run the recorded steps so that undo and /trace keep working.
                Session s(d.trace->initial, RuleCatalogue::from_label(d.catalogue), step_limit_);
                for (const auto& st : d.trace->steps) s.step(redex_id(st.rule, st.footprint));
                session_.emplace(std::move(s));
            } else {
                session_.emplace(d.graph, RuleCatalogue::from_label(d.catalogue), step_limit_);
            }
            return {200, state()};
        }
        bool known = (method == "GET" && (path == "/graph" || path == "/redexes" || path == "/trace")) ||
                     (method == "POST" && (path == "/step" || path == "/undo"));
        if (!known) return fail(404, "not_found", std::string(method) + " " + std::string(path) + " is not part of the API");
        if (!session_) return fail(400, "no_session", "nothing loaded; POST /load first");

        if (path == "/graph") return {200, Json{{"graph", graph_to_json(session_->current())},
                                                 {"hash", content_hash(session_->current())},
                                                 {"steps", session_->steps()}}};
        if (path == "/redexes") return {200, Json{{"redexes", redex_list()}}};
        if (path == "/trace") return {200, trace_to_json(session_->trace())};
        if (path == "/undo") {
            if (session_->steps() == 0) return fail(400, "nothing_to_undo", "already at the initial graph");
            session_->undo();
            return {200, state()};
        }
        // POST /step
        Json req = Json::parse(body);
        if (!req.is_object() || !req.contains("redex_id") || !req["redex_id"].is_string())
            return fail(400, "bad_request", "expected {\"redex_id\": string}");
        std::string id = req["redex_id"].get<std::string>();
        if (session_->steps() >= step_limit_) return fail(400, "step_limit", "step limit reached");
        session_->step(id);
        return {200, state()};
    } catch (const RedexError& e) {
        return fail(400, "stale_id", e.what());
    } catch (const Error& e) {
        return fail(400, error_code(e), e.what());
    } catch (const Json::exception& e) {
        return fail(400, "bad_json", e.what());
    } catch (const std::exception& e) {
        return fail(500, "internal_error", e.what());
    }
}

void Server::listen(const std::string& host, int port) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        http_ = std::make_unique<httplib::Server>();
    }
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
        HttpReply r = handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump(), "application/json");
    };
    for (const char* p : {"/graph", "/redexes", "/trace"}) http_->Get(p, route);
    for (const char* p : {"/step", "/undo", "/load"}) http_->Post(p, route);
    http_->set_error_handler([this](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404) {
            HttpReply r = handle(req.method, req.path, req.body);
            res.set_content(r.body.dump(), "application/json");
        }
    });
    if (port == 0) {
        port_ = http_->bind_to_any_port(host);
    } else {
        if (!http_->bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
        port_ = port;
    }
    if (port_ < 0) throw Error("cannot bind " + host);
    http_->listen_after_bind();
}

void Server::wait_until_ready() const {
    for (;;) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (http_ && http_->is_running()) return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
}

void Server::stop() {
    std::lock_guard<std::mutex> lock(mu_);
    if (http_) http_->stop();
}

}  // namespace pgr

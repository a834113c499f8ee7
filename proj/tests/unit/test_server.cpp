#include <doctest.h>

#include <httplib.h>

#include <thread>

#include "pgr/document.hpp"
#include "pgr/server.hpp"

using namespace pgr;

namespace {

std::string data(const std::string& name) { return read_file(std::string(PGR_DATA_DIR) + "/" + name); }

std::string load_body(const std::string& kind, const std::string& text) {
    return Json{{"kind", kind}, {"text", text}}.dump();
}

std::string step_body(const std::string& id) { return Json{{"redex_id", id}}.dump(); }

}  // namespace

TEST_CASE("session API without a socket") {
    Server srv;
    auto r = srv.handle("GET", "/graph", "");
    CHECK(r.status == 400);
    CHECK(r.body["code"] == "no_session");
    CHECK(srv.handle("GET", "/nowhere", "").status == 404);

    r = srv.handle("POST", "/load", load_body("term", data("three.lam")));
    REQUIRE(r.status == 200);
    CHECK(r.body["steps"] == 0);
    CHECK(r.body["catalogue"] == "lambda");
    REQUIRE(r.body["redexes"].size() == 1);
    std::string id = r.body["redexes"][0]["id"];
    std::string h0 = r.body["hash"];

    r = srv.handle("POST", "/step", step_body(id));
    REQUIRE(r.status == 200);
    CHECK(r.body["steps"] == 1);
    CHECK(r.body.contains("graph"));

    r = srv.handle("POST", "/step", step_body(id));
    CHECK(r.status == 400);
    CHECK(r.body["code"] == "stale_id");

    CHECK(srv.handle("POST", "/step", "{}").body["code"] == "bad_request");
    CHECK(srv.handle("POST", "/step", "not json").body["code"] == "bad_json");

    r = srv.handle("POST", "/undo", "");
    CHECK(r.status == 200);
    CHECK(r.body["hash"] == h0);
    CHECK(srv.handle("POST", "/undo", "").body["code"] == "nothing_to_undo");

    CHECK(srv.handle("GET", "/redexes", "").body["redexes"].size() == 1);
    r = srv.handle("GET", "/trace", "");
    CHECK(r.body["steps"].empty());
    CHECK(r.body["final_hash"] == h0);
}

TEST_CASE("load errors are reported with codes") {
    Server srv;
    CHECK(srv.handle("POST", "/load", load_body("term", "\\x. x x")).body["code"] == "linearity_error");
    auto r = srv.handle("POST", "/load", load_body("proof", "andI(ax(A)"));
    CHECK(r.status == 400);
    CHECK(r.body["code"] == "parse_error");
    CHECK(srv.handle("POST", "/load", load_body("proof", "andE1(ax(A))")).body["code"] == "proof_error");
    CHECK(srv.handle("POST", "/load", load_body("picture", "x")).body["code"] == "bad_request");
    CHECK(srv.handle("POST", "/load", "{\"kind\": \"proof\"}").body["code"] == "bad_request");
    // A failed load keeps the previous session.
    srv.handle("POST", "/load", load_body("proof", data("comm.prf")));
    srv.handle("POST", "/load", load_body("proof", "nonsense("));
    CHECK(srv.handle("GET", "/graph", "").body["graph"]["nodes"].size() == 4);
}

TEST_CASE("loading a trace restores its steps") {
    Server srv;
    auto r = srv.handle("POST", "/load", load_body("trace", data("three.trace.json")));
    REQUIRE(r.status == 200);
    CHECK(r.body["steps"] == 3);
    CHECK(r.body["redexes"].empty());
    CHECK(srv.handle("POST", "/undo", "").body["steps"] == 2);
    Json trace = srv.handle("GET", "/trace", "").body;
    CHECK(trace["steps"].size() == 2);
}

TEST_CASE("recorded trace replays step by step over HTTP") {
    Json fixture = Json::parse(data("three.trace.json"));
    Server srv;
    std::thread t([&] { srv.listen("127.0.0.1", 0); });
    srv.wait_until_ready();
    httplib::Client cli("127.0.0.1", srv.port());

    auto res = cli.Post("/load", load_body("term", data("three.lam")), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    for (const auto& st : fixture["steps"]) {
        std::string id = redex_id(st["rule"], st["footprint"].get<std::vector<NodeId>>());
        res = cli.Post("/step", step_body(id), "application/json");
        REQUIRE(res);
        REQUIRE(res->status == 200);
        CHECK(Json::parse(res->body)["hash"] == st["hash"]);
    }
    res = cli.Get("/graph");
    REQUIRE(res);
    CHECK(Json::parse(res->body)["hash"] == fixture["final_hash"]);
    res = cli.Get("/trace");
    REQUIRE(res);
    CHECK(Json::parse(res->body)["steps"] == fixture["steps"]);
    res = cli.Post("/step", step_body("beta:0,1"), "application/json");
    REQUIRE(res);
    CHECK(res->status == 400);
    CHECK(Json::parse(res->body)["code"] == "stale_id");
    res = cli.Get("/elsewhere");
    REQUIRE(res);
    CHECK(res->status == 404);

    srv.stop();
    t.join();
}

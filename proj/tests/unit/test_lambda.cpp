#include <doctest.h>

#include <functional>

#include "gen.hpp"
#include "pgr/engine.hpp"
#include "pgr/iso.hpp"
#include "pgr/parse.hpp"

using namespace pgr;

namespace {

// Every one-step beta reduct of t, at any position.
std::vector<TermPtr> reducts(const TermPtr& t) {
    std::vector<TermPtr> out;
    switch (t->kind()) {
        case Term::Kind::var: break;
        case Term::Kind::abs:
            for (auto& b : reducts(t->body())) out.push_back(Term::abs(t->name(), b));
            break;
        case Term::Kind::app:
            if (t->fun()->kind() == Term::Kind::abs)
                out.push_back(substitute(t->fun()->body(), t->fun()->name(), t->arg()));
            for (auto& f : reducts(t->fun())) out.push_back(Term::app(f, t->arg()));
            for (auto& a : reducts(t->arg())) out.push_back(Term::app(t->fun(), a));
            break;
    }
    return out;
}

// Gr(u) with its free-variable slots put back in the order of `original`.
PortGraph in_order_of(const TermPtr& original, const TermPtr& u) {
    auto before = check_linear(original), after = check_linear(u);
    std::vector<std::size_t> order;
    for (const auto& x : before) order.push_back(std::find(after.begin(), after.end(), x) - after.begin());
    order.push_back(after.size());
    return restrict_to_slots(translate_term(u), order);
}

}  // namespace

TEST_CASE("parse_term and printing") {
    CHECK(parse_term("\\x y. y x")->str() == "\\x y. y x");
    CHECK(parse_term("(\\x. x) (\\x. x)")->str() == "(\\x. x) (\\x. x)");
    CHECK(parse_term("λx. x")->str() == "\\x. x");
    CHECK(parse_term("f (g a)")->str() == "f (g a)");
    CHECK(parse_term("(f g) a")->str() == "f g a");
    CHECK(alpha_equivalent(parse_term("\\x. x"), parse_term("\\y. y")));
    CHECK_FALSE(alpha_equivalent(parse_term("\\x y. x y"), parse_term("\\x y. y x")));
}

TEST_CASE("check_linear") {
    CHECK(check_linear(parse_term("x")) == std::vector<std::string>{"x"});
    CHECK(check_linear(parse_term("\\x y. y x")).empty());
    CHECK(check_linear(parse_term("u (\\x. x) v")) == std::vector<std::string>{"u", "v"});
    try {
        check_linear(parse_term("\\x. x x", false));
        FAIL("expected a linearity error");
    } catch (const LinearityError& e) {
        CHECK(std::string(e.what()).find('x') != std::string::npos);
    }
    CHECK_THROWS_AS(check_linear(parse_term("\\x. y", false)), LinearityError);
    CHECK_THROWS_AS(check_linear(parse_term("u u", false)), LinearityError);
    CHECK_THROWS_AS(parse_term("\\x. x x"), LinearityError);
}

TEST_CASE("translate_term") {
    PortGraph x = translate_term(parse_term("x"));
    CHECK(x.node_count() == 0);
    CHECK(x.interface()[0].peer == PortRef::slot(1));

    PortGraph ii = translate_term(parse_term("(\\x. x) (\\x. x)"));
    CHECK(ii.count_named("app") == 1);
    CHECK(ii.count_named("lam") == 2);
    for (NodeId l : ii.ids_named("lam")) CHECK(ii.peer({l, ports::body}) == PortRef{l, ports::binder});

    PortGraph swap = translate_term(parse_term("\\x y. y x"));
    PortGraph want = build_graph({{"lam", {}}, {"lam", {}}, {"app", {}}},
                                 {{0, "body", 1, "root"}, {1, "body", 2, "root"}, {2, "fun", 1, "binder"}, {2, "arg", 0, "binder"}});
    CHECK(is_isomorphic(swap, want));
}

TEST_CASE("beta on graphs") {
    RuleCatalogue lam = RuleCatalogue::lambda();
    PortGraph id = translate_term(parse_term("\\x. x"));
    CHECK(list_redexes(id, lam).empty());
    Trace t = normalise(translate_term(parse_term("(\\x y. y x) (\\x. x) (\\x. x)")), lam);
    CHECK(t.size() == 3);
    CHECK(is_isomorphic(t.final_graph, id));
}

TEST_CASE("term-level beta") {
    CHECK(substitute(parse_term("\\y. y x"), "x", parse_term("y"))->str() == "\\y'. y' y");
    CHECK(count_beta_redexes(parse_term("(\\x. x) ((\\y. y) z)")) == 2);
    CHECK(beta_step(parse_term("(\\x. x) ((\\y. y) z)")).value()->str() == "(\\y. y) z");
    CHECK_FALSE(beta_step(parse_term("\\x. x")).has_value());
    std::size_t steps = 0;
    CHECK(normalise_term(parse_term("(\\x y. y x) (\\x. x) (\\x. x)"), &steps)->str() == "\\x. x");
    CHECK(steps == 3);
}

TEST_CASE("graph beta simulates term beta") {
    testing::Rng rng(2718);
    RuleCatalogue lam = RuleCatalogue::lambda();
    for (int i = 0; i < 200; ++i) {
        TermPtr t = testing::random_linear_term(rng, 20);
        PortGraph g = translate_term(t);
        auto rs = list_redexes(g, lam);
        auto ts = reducts(t);
        REQUIRE(rs.size() == count_beta_redexes(t));
        REQUIRE(rs.size() == ts.size());
        for (const auto& r : rs) {
            PortGraph h = fire(g, r);
            // Nodes outside the redex keep their ids.
            for (const auto& [id, n] : g.nodes())
                if (std::find(r.footprint.begin(), r.footprint.end(), id) == r.footprint.end())
                    CHECK(h.has_node(id));
            bool matched = false;
            for (const auto& u : ts) matched = matched || static_cast<bool>(is_isomorphic(h, in_order_of(t, u)));
            CHECK_MESSAGE(matched, t->str());
        }
        std::size_t term_steps = 0;
        normalise_term(t, &term_steps);
        CHECK(normalise(g, lam).size() == term_steps);
    }
}

TEST_CASE("Curry-Howard renaming") {
    PortGraph ax = translate(parse_proof("ax(A)"));
    CHECK(is_isomorphic(curry_howard_rename(ax, RenameDirection::to_lambda), translate_term(parse_term("x"))));
    PortGraph id = translate(parse_proof("impI(ax(A))"));
    CHECK(is_isomorphic(curry_howard_rename(id, RenameDirection::to_lambda), translate_term(parse_term("\\x. x"))));
    TermPtr swap = parse_term("\\x y. y x");
    PortGraph proof_side = translate(parse_proof("impI(impI(ex(0, impE(ax(A -> B), ax(A)))))"));
    CHECK(is_isomorphic(curry_howard_rename(translate_term(swap), RenameDirection::to_logic), proof_side));
    CHECK(is_isomorphic(translate(term_to_proof(swap)), proof_side));
    try {
        curry_howard_rename(translate(parse_proof("andI(ax(A), ax(B))")), RenameDirection::to_lambda);
        FAIL("expected an error");
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("andI") != std::string::npos);
    }
}

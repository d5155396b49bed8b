#include "doctest.h"

#include "wp/construct.hpp"
#include "wp/expr.hpp"
#include "wp/indset.hpp"

using namespace wp;

TEST_CASE("construction expressions") {
    CHECK(parse_construction("complete(7)") == complete(7));
    CHECK(parse_construction("cycle(5)") == cycle(5));
    CHECK(parse_construction("corona(path(3),2)") == clique_corona(path(3), 2));
    CHECK(parse_construction("kmp(4,4,4)") == complete_multipartite({4, 4, 4}));
    CHECK(parse_construction("fig1()") == figure1_graph());
    CHECK(parse_construction("fig2(6)") == figure2_graph(6));
    CHECK(parse_construction("k1") == complete(1));
    CHECK(parse_construction("join(complete(2),complete(3))") == complete(5));
    CHECK(parse_construction(" lex( complete(2) , union(k1,k1) ) ").m() == 4);  // C_4
    CHECK(parse_construction("union(path(2),path(2))").components().size() == 2);
}

TEST_CASE("construction expression errors") {
    CHECK_THROWS_AS(parse_construction("wheel(4)"), ParseError);
    CHECK_THROWS_AS(parse_construction("complete(4"), ParseError);
    CHECK_THROWS_AS(parse_construction("complete(x)"), ParseError);
    CHECK_THROWS_AS(parse_construction("complete(4)junk"), ParseError);
    CHECK_THROWS_AS(parse_construction("cycle(2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_construction(""), ParseError);
}

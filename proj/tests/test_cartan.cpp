#include "support/algebras.hpp"
#include "support/catchext.hpp"

using namespace iqg;
using namespace iqg::testsupport;

TEST_CASE("simply laced data") {
    CartanDatum d = a2();
    CHECK(d.rank() == 2);
    CHECK(d.eps == std::vector<int>{1, 1});
    CHECK(d.a(0, 0) == 2);
    CHECK(d.a(0, 1) == -1);
    CHECK(d.a(1, 0) == -1);
    CHECK(d.qi(0) == qpow(1));
    CHECK(d.summary() == "[2,-1;-1,2]");

    CartanDatum s = a1a1();
    CHECK(s.a(0, 1) == 0);
    CHECK(s.a(1, 0) == 0);

    CartanDatum t = a3();
    CHECK(t.rank() == 3);
    CHECK(t.a(0, 2) == 0);
    CHECK(t.a(1, 2) == -1);
    CHECK(t.summary() == "[2,-1,0;-1,2,-1;0,-1,2]");
}

TEST_CASE("two-lengths data") {
    CartanDatum d = b2();
    CHECK(d.eps == std::vector<int>{2, 1});
    CHECK(d.a(0, 1) == -1);
    CHECK(d.a(1, 0) == -2);
    CHECK(d.qi(0) == qpow(2));
    CHECK(d.qi_pow(0, -1) == qpow(-2));
    CHECK(d.summary() == "[4,-2;-2,2]");

    CartanDatum g = g2();
    CHECK(g.eps == std::vector<int>{1, 3});
    CHECK(g.a(0, 1) == -3);
    CHECK(g.a(1, 0) == -1);
}

TEST_CASE("rank bounds") {
    CHECK(build_datum({{2}}).rank() == 1);
    CHECK(build_datum({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}).rank() == 4);
    CHECK_THROWS_AS(build_datum({}), CartanError);
    CHECK_THROWS_AS(build_datum({{2, -1, 0, 0, 0},
                                 {-1, 2, -1, 0, 0},
                                 {0, -1, 2, -1, 0},
                                 {0, 0, -1, 2, -1},
                                 {0, 0, 0, -1, 2}}),
                    CartanError);
}

TEST_CASE("rejected pairings") {
    /* not square */
    CHECK_THROWS_AS(build_datum({{2, -1}}), CartanError);
    /* not symmetric */
    CHECK_THROWS_AS(build_datum({{2, -1}, {0, 2}}), CartanError);
    /* diagonal entries must be positive and even */
    CHECK_THROWS_AS(build_datum({{3, -1}, {-1, 2}}), CartanError);
    CHECK_THROWS_AS(build_datum({{0, 0}, {0, 2}}), CartanError);
    CHECK_THROWS_AS(build_datum({{-2, 0}, {0, 2}}), CartanError);
    /* off-diagonal quotients must be nonpositive integers */
    CHECK_THROWS_AS(build_datum({{2, 1}, {1, 2}}), CartanError);
    CHECK_THROWS_AS(build_datum({{4, -3}, {-3, 2}}), CartanError);
}

TEST_CASE("default parameters") {
    CartanDatum d = b2();
    IParams p = default_params(d);
    CHECK(p.serre_on);
    REQUIRE(p.varsigma.size() == 2);
    CHECK(p.varsigma[0] == qpow(-2));
    CHECK(p.varsigma[1] == qpow(-1));
}

TEST_CASE("algebra construction guards") {
    CartanDatum d = a2();
    IParams p = default_params(d);
    p.varsigma.pop_back();
    CHECK_THROWS_AS(UAlgebra(d, p, 12, ""), std::invalid_argument);
    p = default_params(d);
    p.varsigma[0] = RatFunc(0);
    CHECK_THROWS_AS(UAlgebra(d, p, 12, ""), std::invalid_argument);
    CHECK_THROWS_AS(UAlgebra(d, default_params(d), 0, ""), std::invalid_argument);
}

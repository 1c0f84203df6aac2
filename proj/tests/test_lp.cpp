#include <doctest.h>

#include "hypercross/lp.hpp"

using namespace hypercross;
using namespace hypercross::lp;

TEST_CASE("bounded maximization with slack constraints") {
    // maximize x + y subject to x <= 2, y <= 3, x + y <= 4
    Model m(2);
    m.add_constraint({Rat(1), Rat(0)}, Rel::le, 2);
    m.add_constraint({Rat(0), Rat(1)}, Rel::le, 3);
    m.add_constraint({Rat(1), Rat(1)}, Rel::le, 4);
    const Result r = m.maximize({Rat(1), Rat(1)});
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == 4);
    CHECK(r.x[0] + r.x[1] == 4);
}

TEST_CASE("free variables can go negative") {
    // maximize -x subject to x >= -5
    Model m(1);
    m.add_constraint({Rat(1)}, Rel::ge, -5);
    const Result r = m.maximize({Rat(-1)});
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == 5);
    CHECK(r.x[0] == -5);
}

TEST_CASE("infeasible system detected in phase one") {
    Model m(1);
    m.add_constraint({Rat(1)}, Rel::ge, 3);
    m.add_constraint({Rat(1)}, Rel::le, 2);
    CHECK(m.maximize({Rat(1)}).status == Status::infeasible);
    CHECK_FALSE(m.feasible());
}

TEST_CASE("unbounded objective detected") {
    Model m(2);
    m.add_constraint({Rat(1), Rat(-1)}, Rel::le, 1);
    CHECK(m.maximize({Rat(1), Rat(0)}).status == Status::unbounded);
}

TEST_CASE("equality constraints and exact rational optimum") {
    // maximize x subject to 3x + 2y = 1, y >= 0, x <= 1/5
    Model m(2);
    m.add_constraint({Rat(3), Rat(2)}, Rel::eq, 1);
    m.add_constraint({Rat(0), Rat(1)}, Rel::ge, 0);
    m.add_constraint({Rat(1), Rat(0)}, Rel::le, make_rat(1, 5));
    const Result r = m.maximize({Rat(1), Rat(0)});
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == make_rat(1, 5));
    CHECK(r.x[1] == make_rat(1, 5));
}

TEST_CASE("degenerate tableau terminates under Bland's rule") {
    // Beale's cycling example; cycles under the naive most-negative rule.
    Mat A = {
        {make_rat(1, 4), Rat(-8), Rat(-1), Rat(9), Rat(1), Rat(0), Rat(0)},
        {make_rat(1, 2), Rat(-12), make_rat(-1, 2), Rat(3), Rat(0), Rat(1), Rat(0)},
        {Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)},
    };
    Vec b = {Rat(0), Rat(0), Rat(1)};
    Vec c = {make_rat(3, 4), Rat(-20), make_rat(1, 2), Rat(-6), Rat(0), Rat(0), Rat(0)};
    const Result r = solve_standard(A, b, c);
    REQUIRE(r.status == Status::optimal);
    CHECK(r.objective == make_rat(5, 4));  // attained at x = (1, 0, 1, 0)
}

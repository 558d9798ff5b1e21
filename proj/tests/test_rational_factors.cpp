#include "doctest.h"

#include "ore/rational_factors.hpp"

using namespace ore;

namespace {

QPoly from(std::vector<mpq_class> c) { return QPoly(std::move(c)); }

}  // namespace

TEST_CASE("low degree factors are found and verified") {
    // (t^2+1)(t^2-2t+5)(t-3/2)(t^2-2)(t^2+t+1)^2
    QPoly p = from({1, 0, 1}) * from({5, -2, 1}) * from({mpq_class(-3, 2), 1}) * from({-2, 0, 1}) *
              from({1, 1, 1}) * from({1, 1, 1});
    auto f = low_degree_factors(p);
    REQUIRE(f.roots.size() == 1);
    CHECK(f.roots[0] == mpq_class(3, 2));
    REQUIRE(f.definite_quadratics.size() == 3);
    CHECK(f.definite_quadratics[0] == std::pair<mpq_class, mpq_class>(-1, 1));
    CHECK(f.definite_quadratics[1] == std::pair<mpq_class, mpq_class>(0, 1));
    CHECK(f.definite_quadratics[2] == std::pair<mpq_class, mpq_class>(2, 5));
}

TEST_CASE("rational coefficients and close roots") {
    // (t^2 - t/3 + 1/7)(t - 1/1000)(t - 1/999)
    QPoly p = from({mpq_class(1, 7), mpq_class(-1, 3), 1}) * from({mpq_class(-1, 1000), 1}) *
              from({mpq_class(-1, 999), 1});
    auto f = low_degree_factors(p);
    CHECK(f.roots == std::vector<mpq_class>{mpq_class(1, 1000), mpq_class(1, 999)});
    REQUIRE(f.definite_quadratics.size() == 1);
    CHECK(f.definite_quadratics[0].first == mpq_class(1, 3));
    CHECK(f.definite_quadratics[0].second == mpq_class(1, 7));
}

TEST_CASE("irreducible higher factors contribute nothing") {
    auto f = low_degree_factors(from({-2, 0, 0, 1}) * from({1, 1, 1, 1, 1}));
    CHECK(f.roots.empty());
    CHECK(f.definite_quadratics.empty());
}

TEST_CASE("three squares") {
    auto a = three_squares(1);
    REQUIRE(a);
    CHECK((*a)[0] == 1);
    CHECK((*a)[1] == 0);
    auto b = three_squares(2);
    REQUIRE(b);
    CHECK((*b)[0] == 1);
    CHECK((*b)[1] == 1);
    CHECK_FALSE(three_squares(7).has_value());
    CHECK_FALSE(three_squares(28).has_value());
    for (int n = 1; n < 300; ++n) {
        auto r = three_squares(n);
        int m = n;
        while (m % 4 == 0) m /= 4;
        CHECK(r.has_value() == (m % 8 != 7));
        if (r) CHECK((*r)[0] * (*r)[0] + (*r)[1] * (*r)[1] + (*r)[2] * (*r)[2] == n);
    }
}

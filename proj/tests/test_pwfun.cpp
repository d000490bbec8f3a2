#include "doctest.h"

#include <random>
#include <stdexcept>

#include "hhcert/pwfun.hpp"
#include "support/helpers.hpp"

using hhcert::Piece;
using hhcert::PwFun;
using hhcert::Rational;
using th::R;

TEST_CASE("build, evaluate and canonicalize") {
    const PwFun g = PwFun::build({{R("0"), R("1"), R("0")}, {R("1/2"), R("1"), R("1/2")}, {R("3/4"), R("0"), R("2")}});
    CHECK(g.breakpoints() == std::vector<Rational>{R("0"), R("3/4"), R("1")});
    CHECK(g(R("1/3")) == R("1/3"));
    CHECK(g(R("3/4")) == R("2"));
    CHECK(g.left_limit(R("3/4")) == R("3/4"));
    CHECK(g.terminal_value() == R("2"));
    CHECK(g.left_limit(R("0")) == R("0"));

    CHECK_THROWS_AS((void)PwFun::build({{R("1/2"), R("0"), R("0")}}), std::invalid_argument);
    CHECK_THROWS_AS((void)PwFun::build({{R("0"), R("0"), R("0")}, {R("3/2"), R("0"), R("0")}}), std::invalid_argument);
    CHECK_THROWS_AS((void)PwFun::build({{R("0"), R("0"), R("0")}, {R("1/2"), R("0"), R("0")}, {R("1/4"), R("0"), R("0")}}),
                    std::invalid_argument);
}

TEST_CASE("point mass at 1 is representable") {
    const PwFun g = PwFun::step(R("1"), R("3"));
    CHECK(g(R("1/2")) == R("0"));
    CHECK(g.terminal_value() == R("3"));
    CHECK(hhcert::prefix_integral(g, R("1")) == R("0"));
    CHECK(PwFun::build(g.decompose()) == g);
}

TEST_CASE("step and identity") {
    const PwFun s = PwFun::step(R("1/2"));
    CHECK(s(R("1/2")) == R("1"));
    CHECK(s.left_limit(R("1/2")) == R("0"));
    CHECK(hhcert::prefix_integral(s, R("1")) == R("1/2"));
    CHECK(hhcert::prefix_integral(PwFun::identity(), R("1/2")) == R("1/8"));
    CHECK(PwFun::identity().is_nondecreasing());
    CHECK_FALSE((-PwFun::identity()).is_nondecreasing());
    CHECK((PwFun::identity() - PwFun::identity()).is_zero());
}

TEST_CASE("integrals and extrema on the midpoint versus identity difference") {
    const PwFun d = PwFun::identity() - PwFun::step(R("1/2"));
    CHECK(hhcert::integral(d, R("0"), R("1/2")) == R("1/8"));
    CHECK(hhcert::prefix_integral(d, R("1")) == R("0"));
    const auto mx = hhcert::max_prefix_integral(d);
    CHECK(mx.t == R("1/2"));
    CHECK(mx.value == R("1/8"));
    const auto mn = hhcert::min_prefix_integral(d);
    CHECK(mn.t == R("0"));
    CHECK(mn.value == R("0"));
    CHECK_THROWS_AS((void)hhcert::prefix_integral(d, R("2")), std::out_of_range);
}

TEST_CASE("sign profile finds exact interior roots") {
    const PwFun d = PwFun::build({{R("0"), R("3"), R("-1")}});
    const auto sp = hhcert::sign_profile(d);
    REQUIRE(sp.size() == 2);
    CHECK(sp[0] == hhcert::SignInterval{R("0"), R("1/3"), -1});
    CHECK(sp[1] == hhcert::SignInterval{R("1/3"), R("1"), 1});
    CHECK(hhcert::critical_points(d) == std::vector<Rational>{R("0"), R("1/3"), R("1")});
    const auto mn = hhcert::min_prefix_integral(d);
    CHECK(mn.t == R("1/3"));
    CHECK(mn.value == R("-1/6"));
}

TEST_CASE("zero stretches merge in the sign profile") {
    const PwFun d = PwFun::build({{R("0"), R("0"), R("0")}, {R("1/4"), R("1"), R("0")}, {R("1/2"), R("0"), R("0")}});
    const auto sp = hhcert::sign_profile(d);
    REQUIRE(sp.size() == 3);
    CHECK(sp[0].sign == 0);
    CHECK(sp[1] == hhcert::SignInterval{R("1/4"), R("1/2"), 1});
    CHECK(sp[2].sign == 0);
}

TEST_CASE("ties in the prefix minimum go to the smallest t") {
    // H dips to -1/8 at 1/2 and again at 1.
    const PwFun d = PwFun::build({{R("0"), R("0"), R("-1/4")}, {R("1/2"), R("0"), R("1/4")}, {R("3/4"), R("0"), R("-1/4")}});
    const auto mn = hhcert::min_prefix_integral(d);
    CHECK(mn.t == R("1/2"));
    CHECK(mn.value == R("-1/8"));
}

TEST_CASE("random round trips and algebra") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 8);
    auto rand_q = [&] { return Rational(num(rng), den(rng)); };
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Piece> pieces{{R("0"), rand_q(), rand_q()}};
        std::vector<Rational> starts;
        for (int k = 0; k < 4; ++k) {
            Rational s = abs(rand_q());
            while (s > Rational(1)) s -= Rational(1);
            starts.push_back(s);
        }
        std::sort(starts.begin(), starts.end());
        for (const auto& s : starts) pieces.push_back({s, rand_q(), rand_q()});
        const PwFun a = PwFun::build(pieces);
        CHECK(PwFun::build(a.decompose()) == a);
        const PwFun b = PwFun::build({{R("0"), rand_q(), rand_q()}, {R("1/3"), rand_q(), rand_q()}});
        const PwFun sum = a + b;
        for (int k = 0; k <= 12; ++k) {
            const Rational t(k, 12);
            CHECK(sum(t) == a(t) + b(t));
            CHECK(hhcert::subtract(a, b)(t) == a(t) - b(t));
            CHECK(hhcert::prefix_integral(sum, t) == hhcert::prefix_integral(a, t) + hhcert::prefix_integral(b, t));
        }
        const PwFun d = a - b;
        const auto mn = hhcert::min_prefix_integral(d);
        const auto mx = hhcert::max_prefix_integral(d);
        for (int k = 0; k <= 60; ++k) {
            const Rational v = hhcert::prefix_integral(d, Rational(k, 60));
            CHECK(v >= mn.value);
            CHECK(v <= mx.value);
        }
        CHECK(hhcert::prefix_integral(d, mn.t) == mn.value);
    }
}

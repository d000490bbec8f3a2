#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hhcert/functional.hpp"
#include "hhcert/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/helpers.hpp"

using hhcert::Functional;
using hhcert::Rational;
using th::F;
using th::R;

namespace {

Functional random_mixed(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 12), count(0, 3);
    auto node = [&] {
        const int d = den(rng);
        return Rational(std::uniform_int_distribution<int>(0, d)(rng), d);
    };
    std::vector<hhcert::Atom> atoms;
    for (int i = count(rng); i > 0; --i) atoms.push_back({node(), Rational(num(rng), den(rng))});
    std::vector<hhcert::FTerm> terms;
    Rational total;
    for (int i = count(rng) + 1; i > 0; --i) {
        terms.push_back({node(), Rational(num(rng), den(rng))});
        total += terms.back().coef;
    }
    terms.push_back({node(), -total});
    return Functional::make(std::move(atoms), std::move(terms));
}

}  // namespace

TEST_CASE("make validates, sorts and merges") {
    const Functional fn = F({{R("1"), R("1")}, {R("0"), R("-1/2")}, {R("0"), R("-1/2")}});
    REQUIRE(fn.f_terms().size() == 2);
    CHECK(fn.f_terms()[0].node == R("0"));
    CHECK(fn.f_terms()[0].coef == R("-1"));
    CHECK_THROWS_AS((void)F({{R("0"), R("1")}, {R("1"), R("-2")}}), std::invalid_argument);
    CHECK_THROWS_AS((void)F({{R("-1/2"), R("1")}, {R("1"), R("-1")}}), std::invalid_argument);
    CHECK_THROWS_AS((void)F({}, {{R("3/2"), R("1")}}), std::invalid_argument);
    CHECK_THROWS_AS((void)hhcert::IntervalSpec::make(R("1"), R("1")), std::invalid_argument);
}

TEST_CASE("reference functionals") {
    using namespace hhcert::reference;
    CHECK(hhcert::bv_transform(integral_mean()) == hhcert::PwFun::identity());
    CHECK(hhcert::bv_transform(midpoint()) == hhcert::PwFun::step(R("1/2")));
    const auto trap = hhcert::bv_transform(trapezoid());
    CHECK(trap(R("0")) == R("1/2"));
    CHECK(trap.terminal_value() == R("1"));
    for (const auto& fn : {midpoint(), trapezoid(), integral_mean()}) {
        CHECK(hhcert::mass(fn) == R("1"));
        CHECK(hhcert::mean_integral(fn) == R("1/2"));
    }
    CHECK(hhcert::mean_integral(point_eval(R("0"))) == R("1"));
}

TEST_CASE("four-point formula transform has the expected densities") {
    // 1/3 F(0) - 8/3 F(1/4) + 8/3 F(3/4) - 1/3 F(1)
    const Functional fn = F({{R("0"), R("1/3")}, {R("1/4"), R("-8/3")}, {R("3/4"), R("8/3")}, {R("1"), R("-1/3")}});
    const auto g = hhcert::bv_transform(fn);
    CHECK(g.slope(0) == R("-1/3"));
    CHECK(g.slope(1) == R("7/3"));
    CHECK(g.slope(2) == R("-1/3"));
    CHECK(hhcert::mass(fn) == R("1"));
    CHECK(hhcert::mean_integral(fn) == R("1/2"));
}

TEST_CASE("transform matches the closed forms on random mixed functionals") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        const Functional fn = random_mixed(rng);
        const auto g = hhcert::bv_transform(fn);
        for (int k = 0; k <= 24; ++k) {
            const Rational t(k, 24);
            CHECK(g(t) == bf::G(fn, t));
            CHECK(hhcert::prefix_integral(g, t) == bf::H(fn, t));
        }
        CHECK(hhcert::mass(fn) == bf::mass(fn));
        CHECK(hhcert::prefix_integral(g, Rational(1)) == hhcert::mean_integral(fn));
        // T(1) = mass and T(u) = mass - mean integral.
        CHECK(hhcert::evaluate_exact(fn, hhcert::TestFunction::power(1)) == hhcert::mass(fn) - hhcert::mean_integral(fn));
    }
}

TEST_CASE("mass agrees with the descending-alpha form") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        const Functional fn = random_mixed(rng);
        Rational direct;
        for (const auto& t : fn.f_terms()) {
            const Rational alpha = Rational(1) - t.node;  // point alpha x + (1 - alpha) y
            direct += t.coef * (Rational(1) - alpha);
        }
        if (fn.atoms().empty()) CHECK(hhcert::mass(fn) == direct);
    }
}

TEST_CASE("transform is linear in the functional") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        const Functional a = random_mixed(rng);
        const Functional b = random_mixed(rng);
        auto atoms = a.atoms();
        atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
        auto terms = a.f_terms();
        terms.insert(terms.end(), b.f_terms().begin(), b.f_terms().end());
        const Functional sum = Functional::make(atoms, terms);
        CHECK(hhcert::bv_transform(sum) == hhcert::bv_transform(a) + hhcert::bv_transform(b));
    }
}

TEST_CASE("numeric evaluation is covariant under affine changes of interval") {
    std::mt19937_64 rng(17);
    const hhcert::IntervalSpec unit;
    const auto iv = hhcert::IntervalSpec::make(R("-3"), R("7"));
    const double x = -3.0, h = 10.0;
    for (int iter = 0; iter < 200; ++iter) {
        const Functional fn = random_mixed(rng);
        for (int p = 1; p <= 4; ++p) {
            const auto tf = hhcert::TestFunction::power(p);
            const double exact = hhcert::evaluate_exact(fn, tf).to_double();
            const double on_unit = hhcert::evaluate_numeric(
                fn, [&](double u) { return tf.f(u); }, [&](double u) { return tf.antiderivative(u); }, unit);
            const double pulled = hhcert::evaluate_numeric(
                fn, [&](double s) { return tf.f((s - x) / h); },
                [&](double s) { return h * tf.antiderivative((s - x) / h); }, iv);
            CHECK(on_unit == doctest::Approx(exact).epsilon(1e-12));
            CHECK(pulled == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

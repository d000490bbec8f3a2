#include "doctest.h"

#include <cmath>

#include "hhcert/corpus.hpp"
#include "hhcert/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using hhcert::Rational;
using hhcert::TestFunction;
using hhcert::Verdict;
using th::R;
namespace ref = hhcert::reference;

TEST_CASE("test functions") {
    CHECK(TestFunction::hinge(R("1/4")).f_exact(R("3/4")) == R("1/2"));
    CHECK(TestFunction::hinge(R("1/4")).antiderivative_exact(R("3/4")) == R("1/8"));
    CHECK(TestFunction::absdev(R("1/2")).antiderivative_exact(R("0")) == R("-1/8"));
    CHECK(TestFunction::power(3).antiderivative_exact(R("1/2")) == R("1/64"));
    CHECK_FALSE(TestFunction::exponential(1.0).is_exact());
    CHECK_THROWS_AS((void)TestFunction::exponential(1.0).f_exact(R("0")), std::logic_error);
    CHECK_THROWS_AS((void)TestFunction::power(0), std::invalid_argument);
    CHECK(TestFunction::exponential(-1.0).antiderivative(0.0) == doctest::Approx(-1.0));
    CHECK(hhcert::standard_family(4).size() == 12);
}

TEST_CASE("hinge sweep on the four-point formula") {
    const auto eq8 = hhcert::named_functional("eq8");
    const auto up = hhcert::hinge_sweep(eq8, ref::midpoint());
    CHECK(up.max_violation == R("1/24"));
    CHECK(up.t == R("1/2"));
    const auto down = hhcert::hinge_sweep(ref::midpoint(), eq8);
    CHECK(down.max_violation == R("1/84"));
    CHECK(down.t == R("2/7"));
    CHECK(hhcert::hinge_exact(ref::midpoint(), R("1/4")) - hhcert::hinge_exact(eq8, R("1/4")) == R("1/96"));
    CHECK(hhcert::hinge_sweep(ref::midpoint(), hhcert::named_functional("remark3")).max_violation <= R("0"));
    CHECK_THROWS_AS((void)hhcert::hinge_sweep(hhcert::named_functional("ex6-printed"), ref::midpoint()),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)hhcert::hinge_exact(eq8, R("2")), std::out_of_range);
}

TEST_CASE("two hinge paths and the checker agree on random constrained pairs") {
    for (const auto& [lhs, rhs] : gen::constrained_pairs(1000, 77)) {
        for (int k = 0; k <= 8; ++k) {
            const Rational t(k, 8);
            CHECK(hhcert::hinge_exact(lhs, t) == bf::hinge(lhs, t));
            CHECK(hhcert::evaluate_exact(lhs, TestFunction::hinge(t)) == bf::hinge(lhs, t));
        }
        const auto sweep = hhcert::hinge_sweep(lhs, rhs);
        const bool holds = hhcert::compare(lhs, rhs).verdict == Verdict::Holds;
        CHECK(holds == (sweep.max_violation.sign() <= 0));
        const auto best = bf::max_hinge_gap(lhs, rhs);
        CHECK(sweep.max_violation == best.value);
    }
}

TEST_CASE("numeric cross-check follows the exact verdict") {
    const auto family = hhcert::standard_family(50);
    for (const auto& [lhs, rhs] : gen::constrained_pairs(200, 5)) {
        const bool holds = hhcert::compare(lhs, rhs).verdict == Verdict::Holds;
        for (const auto& iv : {hhcert::IntervalSpec{}, hhcert::IntervalSpec::make(R("-3"), R("7"))}) {
            const auto report = hhcert::numeric_cross_check(lhs, rhs, family, iv);
            if (holds) CHECK(report.max_difference <= 1e-9);
            for (std::size_t i = 0; i < family.size(); ++i) {
                if (!family[i].is_exact()) continue;
                const double exact = (hhcert::evaluate_exact(lhs, family[i]) - hhcert::evaluate_exact(rhs, family[i])).to_double();
                CHECK(std::abs(report.entries[i].difference - exact) <= 1e-9);
            }
        }
    }
}

TEST_CASE("random instances honour their constraints") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        hhcert::RandomInstanceSpec s;
        s.seed = seed;
        s.node_count = 5;
        s.atom_count = 2;
        s.constraint = hhcert::InstanceConstraint::Mass1Mean12;
        const auto fn = hhcert::random_functional(s);
        CHECK(hhcert::mass(fn) == R("1"));
        CHECK(hhcert::mean_integral(fn) == R("1/2"));
        CHECK(fn == hhcert::random_functional(s));
        s.constraint = hhcert::InstanceConstraint::Mass1;
        CHECK(hhcert::mass(hhcert::random_functional(s)) == R("1"));
    }
    hhcert::RandomInstanceSpec bad;
    bad.node_count = 2;
    bad.constraint = hhcert::InstanceConstraint::Mass1Mean12;
    CHECK_THROWS_AS((void)hhcert::random_functional(bad), std::invalid_argument);
    bad.node_count = 9;
    CHECK_THROWS_AS((void)hhcert::random_functional(bad), std::invalid_argument);
}

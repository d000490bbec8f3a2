#include "doctest.h"

#include <set>

#include "hhcert/corpus.hpp"
#include "support/helpers.hpp"

using hhcert::PrintedClaim;
using hhcert::Verdict;
using th::R;

TEST_CASE("corpus ids are unique and complete") {
    std::set<std::string> ids;
    for (const auto& item : hhcert::regression_corpus()) CHECK(ids.insert(item.id).second);
    for (const char* id : {"hh-classic-left", "hh-classic-right", "remark3-left", "remark3-right", "prop4-printed",
                           "prop4-reversed", "prop2-threepoint", "ex1", "ex2", "ex3-left", "ex3-right", "ex4-printed",
                           "ex4-constructed-left", "ex4-constructed-right", "ex5-star", "ex5-doublestar", "ex6-printed",
                           "ex7", "t2-sample"})
        CHECK(ids.count(id) == 1);
    CHECK(hhcert::find_corpus_item("nope") == nullptr);
    CHECK_THROWS_AS((void)hhcert::named_functional("nope"), std::out_of_range);
}

TEST_CASE("claim agreement rule") {
    CHECK(hhcert::claim_agrees(PrintedClaim::Holds, Verdict::Holds));
    CHECK_FALSE(hhcert::claim_agrees(PrintedClaim::Holds, Verdict::NotComparable));
    CHECK(hhcert::claim_agrees(PrintedClaim::Fails, Verdict::NotComparable));
    CHECK_FALSE(hhcert::claim_agrees(PrintedClaim::Fails, Verdict::Holds));
    CHECK(hhcert::claim_agrees(PrintedClaim::None, Verdict::Fails));
}

TEST_CASE("regression suite") {
    const auto r = hhcert::run_regression_suite();
    CHECK(r.all_expected);
    for (const auto& row : r.rows) CHECK_MESSAGE(row.computed == row.expected, row.id);
    REQUIRE(r.errata.size() == 4);
    CHECK(r.errata[0].rfind("prop4-printed:", 0) == 0);
    CHECK(r.errata[1].rfind("ex4-printed:", 0) == 0);
    CHECK(r.errata[2].rfind("ex6-printed:", 0) == 0);
    CHECK(r.errata[3].find("condition (ii)") != std::string::npos);
    CHECK(r.errata[3].find("a=-2") != std::string::npos);
    const auto again = hhcert::run_regression_suite();
    CHECK(again.errata == r.errata);
}

TEST_CASE("corpus spot values") {
    const auto& ex6 = *hhcert::find_corpus_item("ex6-printed");
    const auto c = hhcert::compare(ex6.spec.lhs, ex6.spec.rhs);
    CHECK(c.mass_lhs == R("-1/2"));
    const auto& ex4 = *hhcert::find_corpus_item("ex4-printed");
    CHECK(hhcert::compare(ex4.spec.lhs, ex4.spec.rhs).mass_rhs == R("1/2"));
    const auto& ex7 = *hhcert::find_corpus_item("ex7");
    const auto c7 = hhcert::compare(ex7.spec.lhs, ex7.spec.rhs);
    CHECK(c7.profile.areas == std::vector<hhcert::Rational>{R("1/16"), R("1/48"), R("1/48"), R("1/16")});
}

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hhcert/ordering.hpp"
#include "hhcert/spec_io.hpp"

namespace hhcert {

enum class PrintedClaim { Holds, Fails, None };

[[nodiscard]] std::string_view to_string(PrintedClaim c);

struct CorpusItem {
    std::string id;
    ComparisonSpec spec;
    PrintedClaim printed_claim = PrintedClaim::None;
    /// Ground truth the suite checks against.
    Verdict expected = Verdict::Holds;
    std::string source;
};

/// Named functionals on [0, 1] used by the corpus, e.g. "eq8", "remark3",
/// "prop4", "ex2", "ex3", "ex4-printed", "ex4-constructed", "ex6-printed",
/// "prop2-sample", "t2-sample". Throws std::out_of_range for unknown names.
[[nodiscard]] Functional named_functional(std::string_view name);

[[nodiscard]] const std::vector<CorpusItem>& regression_corpus();
/// nullptr when the id is unknown.
[[nodiscard]] const CorpusItem* find_corpus_item(std::string_view id);

/// A printed "fails" agrees with fails or not_comparable; "none" always agrees.
[[nodiscard]] bool claim_agrees(PrintedClaim claim, Verdict computed);

struct SuiteRow {
    std::string id;
    PrintedClaim printed_claim;
    Verdict computed;
    Verdict expected;
    bool agrees_with_printed;
    std::string source;
    Certificate certificate;
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    /// Printed claims that disagree, corpus rows first, then printed conditions
    /// that contradict the ground truth.
    std::vector<std::string> errata;
    bool all_expected = true;
};

[[nodiscard]] SuiteResult run_regression_suite();

}  // namespace hhcert

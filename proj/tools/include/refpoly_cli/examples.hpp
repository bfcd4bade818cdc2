#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace refpoly::cli {

// Golden values compiled into the binary from data/golden_examples.json.
const char* embedded_golden();

struct ExampleSummary {
  int examples = 0;
  int checks = 0;
  int mismatches = 0;
};

// Recomputes every value listed in the golden document and reports one
// line per mismatch plus one summary line per example. `only` restricts the
// run to a single example id. Throws InputError for an unknown id or a
// malformed document.
ExampleSummary run_examples(const nlohmann::json& golden, const std::optional<std::string>& only,
                            std::ostream& out);

}  // namespace refpoly::cli

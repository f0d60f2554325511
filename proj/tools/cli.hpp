#pragma once

#include "rigidepth/field.hpp"

#include <cstdint>
#include <optional>
#include <ostream>

namespace rigidepth::cli {

enum class OutputFormat { text, json };

struct RunConfig {
    FieldSpec field = FieldSpec::rationals();
    std::size_t facet_cap = 20;
    std::optional<int> grid_bound;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;
    bool oracle = false;
};

/// Exit codes: 0 success, 1 a verdict disagreement or audit violation,
/// 2 bad usage or input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigidepth::cli

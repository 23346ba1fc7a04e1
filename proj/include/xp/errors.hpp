#pragma once

#include <stdexcept>
#include <string>

namespace xp {

// Invalid parameters or malformed configuration. The CLI maps this to exit code 2.
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Deliberate resource cap exceeded (e.g. exact solver asked for a huge instance).
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized generator exhausted its retry budget.
struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A query-game strategy misbehaved (out-of-range query, malformed output).
struct strategy_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CSV/plot input did not match the expected schema.
struct schema_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace xp

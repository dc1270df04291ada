#pragma once

#include <iosfwd>

#include "settings.hpp"

namespace comparo::cli {

/// Each command reads its inputs from `settings` and writes results and
/// progress to `out`. Failures surface as
/// ConfigError or DataError, which the caller maps to exit codes.
int run_weak_label(const Settings& settings, std::ostream& out);
int run_train(const Settings& settings, std::ostream& out);
int run_tag(const Settings& settings, std::ostream& out);
int run_evaluate(const Settings& settings, std::ostream& out);
int run_grad_check(const Settings& settings, bool corrupt_gradient, std::ostream& out);
int run_synth(const Settings& settings, std::ostream& out);

}  // namespace comparo::cli

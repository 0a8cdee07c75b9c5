#pragma once

#include <cstdint>
#include <string>

#include "msp/bernd/bernoulli.hpp"

namespace msp::cli {

struct ReportOptions {
  std::uint64_t seed = 1;
  /// Feeds the dk section only.
  bernd::BernoulliSource bernoulli = bernd::exact_bernoulli();
};

struct Report {
  std::string text;
  int failures = 0;
  bool passed() const { return failures == 0; }
};

/// Full reproduction suite; sections `== name ==` with PASS/FAIL lines.
Report report_bundle(const ReportOptions& options = {});

}  // namespace msp::cli

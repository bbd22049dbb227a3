#include "compseq/complete.hpp"

#include "compseq/errors.hpp"

namespace compseq {

Integer value_gcd(const Polynomial& p, std::int64_t j0) {
  Integer g = 0;
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) {
    g = gcd(g, eval_int(p, to_integer(j0 + i)));
  }
  return g;
}

CompletenessReport is_complete(const Polynomial& p, std::int64_t j0) {
  CompletenessReport report;
  report.degree = p.degree();
  auto& failures = report.failures;

  const bool integral = is_integer_valued(p);
  if (!integral) failures.push_back("not integer-valued");

  const bool eventually_positive = report.degree >= 1 && sgn(p.leading()) > 0;
  if (report.degree < 1) {
    failures.push_back("degree " + std::to_string(report.degree) + " < 1: a constant sequence is never complete");
  } else if (!eventually_positive) {
    failures.push_back("leading coefficient " + p.leading().get_str() + " is not positive");
  }

  if (eventually_positive) {
    // For integer-valued p, p(n) > 0 and p(n) >= 1 coincide.
    const auto from = positivity_cutoff(p, j0);
    report.positivity_from = from;
    if (from > j0) {
      failures.push_back("not positive: p(" + std::to_string(from - 1) + ") = " +
                         eval(p, to_integer(from - 1)).get_str() + " < 1");
    }
    const auto step = shift(p, 1) - p;
    const auto inc = positivity_cutoff(step, j0);
    report.strictly_increasing_from = inc;
    if (inc > j0) {
      failures.push_back("not strictly increasing: p(" + std::to_string(inc) + ") <= p(" +
                         std::to_string(inc - 1) + "); try j0 >= " + std::to_string(inc));
    }
  }

  if (integral) {
    report.value_gcd = abs(value_gcd(p, j0));
    if (report.value_gcd != 1) failures.push_back("value gcd = " + report.value_gcd.get_str());
  }

  report.verdict = failures.empty();
  return report;
}

}  // namespace compseq

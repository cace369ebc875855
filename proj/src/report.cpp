#include <cstdio>
#include <sstream>

#include "monoham/experiments.hpp"

namespace monoham {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string emit_report(const std::vector<TrialRecord>& records, std::string_view format) {
  std::ostringstream out;
  if (format == "csv" || format == "tsv") {
    const char sep = format == "csv" ? ',' : '\t';
    out << "seed" << sep << "success" << sep << "size" << sep << "best_mono" << sep << "bound" << sep
        << "off_color" << sep << "ms_total" << sep << "fail_phase" << '\n';
    for (const TrialRecord& r : records)
      out << r.seed << sep << (r.success ? 1 : 0) << sep << r.size << sep << r.best_mono << sep
          << fixed(r.bound, 2) << sep << r.off_color << sep << fixed(r.ms.total, 1) << sep << r.fail_phase
          << '\n';
    return out.str();
  }
  if (format == "summary") {
    const Summary s = summarize(records);
    out << "trials " << s.trials << '\n'
        << "success_rate " << fixed(s.success_rate, 4) << '\n'
        << "mean_best_mono " << fixed(s.mean_best_mono, 2) << '\n'
        << "min_best_mono " << s.min_best_mono << '\n'
        << "bound_rate " << fixed(s.bound_rate, 4) << '\n';
    return out.str();
  }
  throw InputError("unknown report format '" + std::string(format) + "'");
}

}  // namespace monoham

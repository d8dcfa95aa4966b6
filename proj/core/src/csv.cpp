#include "permreg/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "permreg/errors.hpp"

namespace permreg {
namespace {

std::string real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void emit_csv(const ResultTable& table, std::ostream& out) {
  out << kResultCsvHeader << '\n';
  for (const auto& r : table.records) {
    out << to_string(r.estimator) << ',' << r.n << ',' << r.m << ',' << r.d
        << ',' << r.rank_a << ',' << real17(r.sigma) << ','
        << to_string(r.model) << ',' << r.trial << ',' << r.seed << ',';
    if (r.normalized_error) {
      out << real17(*r.normalized_error);
    } else {
      out << "skipped:" << r.skip_reason;
    }
    out << ',' << real17(r.elapsed_ms) << '\n';
  }
}

void emit_csv_file(const ResultTable& table,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIoError, "cannot open " + path.string());
  emit_csv(table, out);
  out.flush();
  if (!out) fail(ErrorCode::kIoError, "write failed for " + path.string());
}

}  // namespace permreg

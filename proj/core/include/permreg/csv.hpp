#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "permreg/harness.hpp"

namespace permreg {

inline constexpr std::string_view kResultCsvHeader =
    "estimator,n,m,d,rank_a,sigma,model,trial,seed,normalized_error,"
    "elapsed_ms";

// One line per record after the header. Reals use 17 significant digits.
// Skipped records carry "skipped:<reason>" in the normalized_error column.
void emit_csv(const ResultTable& table, std::ostream& out);
// Throws kIoError if the file cannot be written.
void emit_csv_file(const ResultTable& table, const std::filesystem::path& path);

}  // namespace permreg

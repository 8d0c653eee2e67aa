#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace annobias {

// Exit-code contract of the CLI: 1 usage, 2 data, 3 endpoint.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EndpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FNV-1a, 64 bit. Stable across runs/platforms; used for content hashes,
// fingerprints and cache keys (not cryptographic).
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string to_hex(std::uint64_t value);

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Fixed-precision decimal formatting, locale independent.
std::string format_real(double value, int decimals = 4);

// RFC-4180ish CSV. Reader handles quoted fields with embedded separators,
// quotes and newlines; writer quotes only when needed.
class CsvReader {
  public:
    explicit CsvReader(std::istream& in);
    // Returns false at end of input. Blank lines are skipped.
    bool next_row(std::vector<std::string>& fields);
    std::size_t line_number() const { return line_; }

  private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::string csv_escape(std::string_view field);
std::string csv_join(const std::vector<std::string>& fields);

// Runs fn(i) for i in [0, n) on up to `jobs` threads (0 = hardware default).
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

// ISO-8601 UTC timestamp; honours the ANNOBIAS_TIMESTAMP override so that
// outputs can be made byte-reproducible.
std::string current_timestamp();

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace annobias

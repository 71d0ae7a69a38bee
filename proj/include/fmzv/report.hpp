#pragma once

// Serialization of VerificationRecords and the pieces of the CLI that are
// worth testing without spawning a process: prime ranges, checkpoint scans
// and exit codes.

#include "fmzv/record.hpp"

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fmzv {

enum class Format { jsonl, csv };

/// "jsonl" or "csv"; ParseError otherwise.
Format parse_format(std::string_view text);

/// One line without the trailing newline. JSON keys appear in the order
/// check, k, s, index, p, lhs, rhs, pass, skipped, reason, detail; absent
/// optionals and empty reason/detail are omitted.
std::string to_jsonl(const VerificationRecord& r);

std::string csv_header();
/// Same columns as csv_header; absent optionals are empty cells.
std::string to_csv(const VerificationRecord& r);

std::string format_record(const VerificationRecord& r, Format f);

/// Odd primes in the inclusive range "A..B". ParseError on malformed text,
/// A > B, or B >= 2^61.
std::vector<u64> parse_prime_range(std::string_view text);

/// The fields that fix a record's position in a sweep.
struct RecordKey {
  std::string check;
  std::optional<unsigned> k;
  std::optional<unsigned> s;
  std::optional<std::string> index;
  u64 p = 0;

  bool operator==(const RecordKey&) const = default;
};

RecordKey key_of(const VerificationRecord& r);

/// Parses the key and the failure flag back out of one serialized line.
/// ParseError if the line is not a record.
struct ParsedLine {
  RecordKey key;
  bool failed = false;
};
ParsedLine parse_line(std::string_view line, Format f);

/// State of an existing output file. A trailing line without a newline is an
/// interrupted write: keep_bytes excludes it so it can be truncated away.
struct ResumePoint {
  std::uintmax_t keep_bytes = 0;
  std::size_t records = 0;
  bool has_header = false;
  bool any_failed = false;
  std::optional<RecordKey> last;
};

/// A missing or empty file yields an empty ResumePoint.
ResumePoint scan_for_resume(const std::filesystem::path& path, Format f);

/// 0 if every record passed or was skipped, 1 otherwise.
int exit_code(std::span<const VerificationRecord> records);

} // namespace fmzv

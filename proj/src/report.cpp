#include "fmzv/report.hpp"

#include "fmzv/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>

namespace fmzv {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kColumns[] = {"check", "k",       "s",      "index",  "p",     "lhs",
                                         "rhs",   "pass",    "skipped", "reason", "detail"};

std::string csv_cell(std::string_view v) {
  if (v.find_first_of(",\"\n\r") == std::string_view::npos)
    return std::string(v);
  std::string out = "\"";
  for (char c : v) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  if (quoted)
    throw ParseError("unterminated quote in CSV line");
  return cells;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ParseError(fmt::format("bad {} '{}'", what, text));
  return value;
}

std::optional<unsigned> optional_cell(const std::string& cell, std::string_view what) {
  if (cell.empty())
    return std::nullopt;
  return parse_number<unsigned>(cell, what);
}

} // namespace

Format parse_format(std::string_view text) {
  if (text == "jsonl")
    return Format::jsonl;
  if (text == "csv")
    return Format::csv;
  throw ParseError(fmt::format("unknown format '{}'", text));
}

std::string to_jsonl(const VerificationRecord& r) {
  ordered_json j;
  j["check"] = r.check;
  if (r.k)
    j["k"] = *r.k;
  if (r.s)
    j["s"] = *r.s;
  if (r.index)
    j["index"] = *r.index;
  j["p"] = r.p;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  j["skipped"] = r.skipped;
  if (!r.reason.empty())
    j["reason"] = r.reason;
  if (!r.detail.empty())
    j["detail"] = r.detail;
  return j.dump();
}

std::string csv_header() {
  std::string out;
  for (std::string_view c : kColumns) {
    if (!out.empty())
      out += ',';
    out += c;
  }
  return out;
}

std::string to_csv(const VerificationRecord& r) {
  auto opt = [](const std::optional<unsigned>& v) { return v ? std::to_string(*v) : std::string(); };
  const std::string cells[] = {csv_cell(r.check),
                               opt(r.k),
                               opt(r.s),
                               csv_cell(r.index.value_or("")),
                               std::to_string(r.p),
                               csv_cell(r.lhs),
                               csv_cell(r.rhs),
                               r.pass ? "true" : "false",
                               r.skipped ? "true" : "false",
                               csv_cell(r.reason),
                               csv_cell(r.detail)};
  std::string out;
  for (std::size_t i = 0; i < std::size(cells); ++i) {
    if (i)
      out += ',';
    out += cells[i];
  }
  return out;
}

std::string format_record(const VerificationRecord& r, Format f) {
  return f == Format::jsonl ? to_jsonl(r) : to_csv(r);
}

std::vector<u64> parse_prime_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos)
    throw ParseError(fmt::format("prime range '{}' is not of the form A..B", text));
  const u64 lo = parse_number<u64>(text.substr(0, dots), "range start");
  const u64 hi = parse_number<u64>(text.substr(dots + 2), "range end");
  if (lo > hi)
    throw ParseError(fmt::format("empty prime range '{}'", text));
  if (hi >= kMaxPrime)
    throw ParseError(fmt::format("range end {} is not below 2^61", hi));
  std::vector<u64> primes = primes_in_range(lo, hi);
  std::erase(primes, u64{2});
  return primes;
}

RecordKey key_of(const VerificationRecord& r) { return RecordKey{r.check, r.k, r.s, r.index, r.p}; }

ParsedLine parse_line(std::string_view line, Format f) {
  ParsedLine out;
  if (f == Format::jsonl) {
    const ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("check") || !j.contains("p"))
      throw ParseError("output line is not a JSON record");
    try {
      out.key.check = j.at("check").get<std::string>();
      if (j.contains("k"))
        out.key.k = j.at("k").get<unsigned>();
      if (j.contains("s"))
        out.key.s = j.at("s").get<unsigned>();
      if (j.contains("index"))
        out.key.index = j.at("index").get<std::string>();
      out.key.p = j.at("p").get<u64>();
      out.failed = !j.value("skipped", false) && !j.value("pass", false);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(fmt::format("malformed JSON record: {}", e.what()));
    }
    return out;
  }
  const auto cells = split_csv(line);
  if (cells.size() != std::size(kColumns))
    throw ParseError(fmt::format("CSV line has {} cells, expected {}", cells.size(), std::size(kColumns)));
  out.key.check = cells[0];
  out.key.k = optional_cell(cells[1], "k");
  out.key.s = optional_cell(cells[2], "s");
  if (!cells[3].empty())
    out.key.index = cells[3];
  out.key.p = parse_number<u64>(cells[4], "p");
  out.failed = cells[8] != "true" && cells[7] != "true";
  return out;
}

ResumePoint scan_for_resume(const std::filesystem::path& path, Format f) {
  ResumePoint rp;
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return rp;
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  while (pos < content.size()) {
    const std::size_t nl = content.find('\n', pos);
    if (nl == std::string::npos)
      break; // interrupted write
    const std::string_view line(content.data() + pos, nl - pos);
    if (f == Format::csv && rp.keep_bytes == 0 && line == csv_header()) {
      rp.has_header = true;
    } else if (!line.empty()) {
      const ParsedLine parsed = parse_line(line, f);
      rp.last = parsed.key;
      rp.any_failed = rp.any_failed || parsed.failed;
      ++rp.records;
    }
    pos = nl + 1;
    rp.keep_bytes = pos;
  }
  return rp;
}

int exit_code(std::span<const VerificationRecord> records) {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.failed(); }) ? 1 : 0;
}

} // namespace fmzv

// Copyright 2026 The svq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Append-only ledger of tensed valuations and the audit that checks past
 * truth values never change.
 *
 * Each record states the truth of a proposition at tick `at` as asserted at
 * tick `asserted_at`; the tense follows from comparing the two. Line format,
 * one record per line, fields separated by single spaces:
 *
 *     <at> <prop_id> <past|present|future> <1|0|0/0> <asserted_at>
 */

#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svq/error.hpp"
#include "svq/truth.hpp"

namespace svq {

struct Timestamp {
  std::uint64_t tick = 0;

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

enum class Tense { Past, Present, Future };

constexpr std::string_view to_string(Tense t) noexcept {
  switch (t) {
    case Tense::Past: return "past";
    case Tense::Present: return "present";
    case Tense::Future: return "future";
  }
  return "?";
}

constexpr Tense tense_of(Timestamp at, Timestamp asserted_at) noexcept {
  if (at < asserted_at) return Tense::Past;
  if (at == asserted_at) return Tense::Present;
  return Tense::Future;
}

struct TensedRecord {
  Timestamp at;
  std::string prop_id;
  Tense tense = Tense::Present;
  TruthValue truth = TruthValue::Gap;
  Timestamp asserted_at;

  friend bool operator==(const TensedRecord&, const TensedRecord&) = default;
};

/// Value-semantic ledger: appending yields a new Ledger and leaves the
/// original untouched.
class Ledger {
 public:
  const std::vector<TensedRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  std::optional<Timestamp> last_asserted() const {
    if (records_.empty()) return std::nullopt;
    return records_.back().asserted_at;
  }

  friend bool operator==(const Ledger&, const Ledger&) = default;

  friend Ledger record_valuation(const Ledger& ledger, Timestamp at, std::string prop_id,
                                 TruthValue truth, Timestamp asserted_at);

 private:
  std::vector<TensedRecord> records_;
};

inline bool valid_prop_id(std::string_view id) {
  if (id.empty()) return false;
  for (const char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

inline Ledger record_valuation(const Ledger& ledger, Timestamp at, std::string prop_id,
                               TruthValue truth, Timestamp asserted_at) {
  if (!valid_prop_id(prop_id)) {
    throw Error(ErrorCode::InvalidPropId, "prop id must be non-empty with no whitespace");
  }
  if (const auto last = ledger.last_asserted(); last && asserted_at < *last) {
    throw Error(ErrorCode::NonMonotoneAssertion,
                "asserted_at " + std::to_string(asserted_at.tick) +
                    " precedes the last assertion at " + std::to_string(last->tick));
  }
  Ledger next = ledger;
  next.records_.push_back(TensedRecord{at, std::move(prop_id), tense_of(at, asserted_at),
                                       truth, asserted_at});
  return next;
}

enum class ViolationKind {
  Flip,  // determinate -> other determinate value
  Loss,  // determinate -> gap
};

constexpr std::string_view to_string(ViolationKind k) noexcept {
  return k == ViolationKind::Flip ? "flip" : "loss";
}

struct Violation {
  std::string prop_id;
  Timestamp at;
  TruthValue earlier_truth = TruthValue::Gap;
  TruthValue later_truth = TruthValue::Gap;
  Timestamp later_asserted_at;
  ViolationKind kind = ViolationKind::Flip;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// For every (prop_id, at), compares each later record against the earliest
/// determinate truth. A change to the other value is a Flip; a fall back to
/// a gap is a Loss. Records made before any determinate value is known are
/// refinements, never violations. Future-tense records are not audited.
inline std::vector<Violation> check_past_unalterability(const Ledger& ledger) {
  std::map<std::pair<std::string, std::uint64_t>, TruthValue> settled;
  std::vector<Violation> out;
  for (const auto& rec : ledger.records()) {
    if (rec.tense == Tense::Future) continue;
    const auto key = std::make_pair(rec.prop_id, rec.at.tick);
    const auto it = settled.find(key);
    if (it == settled.end()) {
      if (is_determinate(rec.truth)) settled.emplace(key, rec.truth);
      continue;
    }
    if (rec.truth == it->second) continue;
    out.push_back(Violation{rec.prop_id, rec.at, it->second, rec.truth, rec.asserted_at,
                            rec.truth == TruthValue::Gap ? ViolationKind::Loss
                                                         : ViolationKind::Flip});
  }
  return out;
}

struct TenseViewEntry {
  std::string prop_id;
  Timestamp at;
  Tense tense = Tense::Present;
  TruthValue truth = TruthValue::Gap;
};

/// Relabels every record's tense relative to `now`.
inline std::vector<TenseViewEntry> tense_view(const Ledger& ledger, Timestamp now) {
  std::vector<TenseViewEntry> out;
  out.reserve(ledger.size());
  for (const auto& rec : ledger.records()) {
    out.push_back(TenseViewEntry{rec.prop_id, rec.at, tense_of(rec.at, now), rec.truth});
  }
  return out;
}

inline std::string to_line(const TensedRecord& rec) {
  std::string line = std::to_string(rec.at.tick);
  line += ' ';
  line += rec.prop_id;
  line += ' ';
  line += to_string(rec.tense);
  line += ' ';
  line += to_string(rec.truth);
  line += ' ';
  line += std::to_string(rec.asserted_at.tick);
  return line;
}

inline std::string serialize(const Ledger& ledger) {
  std::string out;
  for (const auto& rec : ledger.records()) {
    out += to_line(rec);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::uint64_t parse_tick(std::string_view field, std::string_view line) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::BadLedgerLine, "bad tick in line: " + std::string(line));
  }
  return value;
}

}  // namespace detail

/// Parses one line back into a record; the stored tense must agree with the
/// two ticks.
inline TensedRecord parse_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const std::size_t next = line.find(' ', pos);
    const std::size_t stop = next == std::string_view::npos ? line.size() : next;
    fields.push_back(line.substr(pos, stop - pos));
    pos = stop + 1;
  }
  if (fields.size() != 5) {
    throw Error(ErrorCode::BadLedgerLine, "expected 5 fields: " + std::string(line));
  }
  TensedRecord rec;
  rec.at = Timestamp{detail::parse_tick(fields[0], line)};
  rec.prop_id = std::string(fields[1]);
  if (!valid_prop_id(rec.prop_id)) {
    throw Error(ErrorCode::BadLedgerLine, "bad prop id: " + std::string(line));
  }
  const auto truth = parse_truth(fields[3]);
  if (!truth) throw Error(ErrorCode::BadLedgerLine, "bad truth value: " + std::string(line));
  rec.truth = *truth;
  rec.asserted_at = Timestamp{detail::parse_tick(fields[4], line)};
  rec.tense = tense_of(rec.at, rec.asserted_at);
  if (fields[2] != to_string(rec.tense)) {
    throw Error(ErrorCode::BadLedgerLine, "tense disagrees with ticks: " + std::string(line));
  }
  return rec;
}

inline Ledger parse_ledger(std::string_view text) {
  Ledger ledger;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    if (!line.empty()) {
      auto rec = parse_line(line);
      ledger = record_valuation(ledger, rec.at, std::move(rec.prop_id), rec.truth,
                                rec.asserted_at);
    }
    pos = end + 1;
  }
  return ledger;
}

}  // namespace svq

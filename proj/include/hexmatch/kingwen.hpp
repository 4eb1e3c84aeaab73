#pragma once

// The King Wen ordering of the 64 hexagrams, its CSV form, and checks of its
// pairing against the reverse-priority matching.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hexmatch/bitcore.hpp"
#include "hexmatch/matching.hpp"
#include "hexmatch/orbits.hpp"

namespace hexmatch {

inline constexpr unsigned hexagram_width = 6;
inline constexpr std::size_t king_wen_count = 64;

/// Bijection from King Wen numbers 1..64 onto the 64 six-bit values.
class KingWenTable {
 public:
  /// values[i] is the hexagram for King Wen number i + 1. Throws RangeError on
  /// out-of-range or repeated values.
  explicit KingWenTable(const std::array<std::uint8_t, king_wen_count>& values) {
    std::array<bool, king_wen_count> seen{};
    for (std::size_t i = 0; i < king_wen_count; ++i) {
      if (values[i] >= king_wen_count) {
        throw RangeError("King Wen " + std::to_string(i + 1) + " maps to " +
                         std::to_string(values[i]) + ", not a 6-bit value");
      }
      if (seen[values[i]]) {
        throw RangeError("value " + std::to_string(values[i]) + " appears twice");
      }
      seen[values[i]] = true;
    }
    values_ = values;
  }

  /// Hexagram for King Wen number kw (1-based).
  BitVector at(unsigned kw) const {
    if (kw < 1 || kw > king_wen_count) {
      throw RangeError("King Wen number " + std::to_string(kw) + " outside [1, 64]");
    }
    return BitVector(values_[kw - 1], hexagram_width);
  }
  BitVector operator[](unsigned kw) const { return at(kw); }

  const std::array<std::uint8_t, king_wen_count>& values() const noexcept { return values_; }

  friend bool operator==(const KingWenTable&, const KingWenTable&) = default;

 private:
  std::array<std::uint8_t, king_wen_count> values_{};
};

inline const KingWenTable& default_table() {
  // Bit 0 is the bottom line.
  static const KingWenTable table({
      63, 0,  17, 34, 23, 58, 2,  16, 55, 59, 7,  56, 61, 47, 4,  8,   //  1-16
      25, 38, 3,  48, 41, 37, 32, 1,  57, 39, 33, 30, 18, 45, 28, 14,  // 17-32
      60, 15, 40, 5,  53, 43, 20, 10, 35, 49, 31, 62, 24, 6,  26, 22,  // 33-48
      29, 46, 9,  36, 52, 11, 13, 44, 54, 27, 50, 19, 51, 12, 21, 42,  // 49-64
  });
  return table;
}

enum class TableErrorKind : std::uint8_t {
  Header,
  Malformed,
  DuplicateKw,
  OutOfOrder,
  DuplicateValue,
  ValueOutOfRange,
  RowCount,
};

/// Rejected table text. line() is 1-based and counts the header.
class ParseError : public Error {
 public:
  ParseError(TableErrorKind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  TableErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  TableErrorKind kind_;
  std::size_t line_;
};

namespace detail {

inline bool parse_uint(std::string_view s, unsigned& out) {
  if (s.empty() || s.size() > 9) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

/// Parses the `kw,binary` CSV form: a header line, then 64 rows
/// `<kw>,<value>` in ascending kw order.
inline KingWenTable parse_table(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError(TableErrorKind::Header, 1, "missing header");
  ++lineno;
  if (line != "kw,binary") {
    throw ParseError(TableErrorKind::Header, lineno, "expected header 'kw,binary'");
  }

  std::array<std::uint8_t, king_wen_count> values{};
  std::array<std::size_t, king_wen_count> value_line{};  // 0 = unseen
  std::array<std::size_t, king_wen_count> kw_line{};
  std::size_t rows = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const auto comma = line.find(',');
    unsigned kw = 0;
    unsigned value = 0;
    if (comma == std::string::npos ||
        !detail::parse_uint(std::string_view(line).substr(0, comma), kw) ||
        !detail::parse_uint(std::string_view(line).substr(comma + 1), value)) {
      throw ParseError(TableErrorKind::Malformed, lineno, "malformed row '" + line + "'");
    }
    if (kw < 1 || kw > king_wen_count) {
      throw ParseError(TableErrorKind::Malformed, lineno,
                       "King Wen number " + std::to_string(kw) + " outside [1, 64]");
    }
    if (kw_line[kw - 1] != 0) {
      throw ParseError(TableErrorKind::DuplicateKw, lineno,
                       "King Wen number " + std::to_string(kw) + " already given on line " +
                           std::to_string(kw_line[kw - 1]));
    }
    if (kw != rows + 1) {
      throw ParseError(TableErrorKind::OutOfOrder, lineno,
                       "expected King Wen number " + std::to_string(rows + 1) + ", got " +
                           std::to_string(kw));
    }
    if (value >= king_wen_count) {
      throw ParseError(TableErrorKind::ValueOutOfRange, lineno,
                       "value " + std::to_string(value) + " is not a 6-bit value");
    }
    if (value_line[value] != 0) {
      throw ParseError(TableErrorKind::DuplicateValue, lineno,
                       "value " + std::to_string(value) + " already used on line " +
                           std::to_string(value_line[value]));
    }
    kw_line[kw - 1] = lineno;
    value_line[value] = lineno;
    values[kw - 1] = static_cast<std::uint8_t>(value);
    ++rows;
  }

  if (rows != king_wen_count) {
    throw ParseError(TableErrorKind::RowCount, lineno + 1,
                     "expected 64 rows, got " + std::to_string(rows));
  }
  return KingWenTable(values);
}

inline KingWenTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_table(in);
}

inline std::string serialize_table(const KingWenTable& table) {
  std::string out = "kw,binary\n";
  for (unsigned kw = 1; kw <= king_wen_count; ++kw) {
    out += std::to_string(kw) + ',' + std::to_string(table.at(kw).value()) + '\n';
  }
  return out;
}

/// Consecutive King Wen numbers (2k+1, 2k+2), in table order.
struct KingWenPair {
  unsigned kw_first;
  unsigned kw_second;
  BitVector first;
  BitVector second;
};

inline std::vector<KingWenPair> pairs(const KingWenTable& table) {
  std::vector<KingWenPair> out;
  out.reserve(king_wen_count / 2);
  for (unsigned kw = 1; kw <= king_wen_count; kw += 2) {
    out.push_back({kw, kw + 1, table.at(kw), table.at(kw + 1)});
  }
  return out;
}

/// Other holds pairs related by neither comp nor rev.
enum class RegularityCategory : std::uint8_t {
  PalindromeComp,
  AntisymBoth,
  GenericRev,
  GenericComp,
  Other,
};

constexpr std::string_view to_string(RegularityCategory c) {
  switch (c) {
    case RegularityCategory::PalindromeComp:
      return "palindrome_comp";
    case RegularityCategory::AntisymBoth:
      return "antisym_both";
    case RegularityCategory::GenericRev:
      return "generic_rev";
    case RegularityCategory::GenericComp:
      return "generic_comp";
    case RegularityCategory::Other:
      return "other";
  }
  return "?";
}

struct PairRegularity {
  KingWenPair pair;
  KindSet kinds;
  unsigned distance;
  RegularityCategory category;
};

struct RegularityReport {
  std::size_t total_pairs = 0;
  std::map<RegularityCategory, std::size_t> breakdown;
  std::map<RegularityCategory, std::uint64_t> cost_by_category;
  std::vector<PairRegularity> per_pair;
  bool all_equivariant = true;
  std::uint64_t total_cost = 0;

  std::vector<PairRegularity> offending() const {
    std::vector<PairRegularity> out;
    for (const auto& p : per_pair) {
      if (p.category == RegularityCategory::Other) out.push_back(p);
    }
    return out;
  }
};

inline RegularityCategory categorize(const PairClassification& c, BitVector first) {
  const bool comp = c.kinds.contains(PairingKind::Comp);
  const bool rev = c.kinds.contains(PairingKind::Rev);
  if (comp && rev) return RegularityCategory::AntisymBoth;
  if (comp && is_palindrome(first)) return RegularityCategory::PalindromeComp;
  if (rev) return RegularityCategory::GenericRev;
  if (comp) return RegularityCategory::GenericComp;
  return RegularityCategory::Other;
}

inline RegularityReport verify_regularity(const KingWenTable& table) {
  RegularityReport r;
  for (auto c : {RegularityCategory::PalindromeComp, RegularityCategory::AntisymBoth,
                 RegularityCategory::GenericRev, RegularityCategory::GenericComp,
                 RegularityCategory::Other}) {
    r.breakdown[c] = 0;
    r.cost_by_category[c] = 0;
  }
  for (const auto& p : pairs(table)) {
    const auto cls = classify_pair(p.first, p.second);
    const auto cat = categorize(cls, p.first);
    r.per_pair.push_back({p, cls.kinds, cls.distance, cat});
    ++r.breakdown[cat];
    r.cost_by_category[cat] += cls.distance;
    r.total_cost += cls.distance;
    if (cat == RegularityCategory::Other) r.all_equivariant = false;
  }
  r.total_pairs = r.per_pair.size();
  return r;
}

struct IsomorphismReport {
  bool equal_as_pair_sets = false;
  std::vector<UnorderedPair> mismatches;  // King Wen pairs absent from the reference
  std::vector<UnorderedPair> missing;     // reference pairs absent from King Wen
};

/// Compares the King Wen pair set with the pair set of
/// build_reverse_priority(6).
inline IsomorphismReport verify_isomorphism(const KingWenTable& table) {
  const auto ref = build_reverse_priority(hexagram_width).pairs();
  const std::set<UnorderedPair> reference(ref.begin(), ref.end());
  std::set<UnorderedPair> kw;
  for (const auto& p : pairs(table)) kw.emplace(p.first, p.second);

  IsomorphismReport r;
  std::set_difference(kw.begin(), kw.end(), reference.begin(), reference.end(),
                      std::back_inserter(r.mismatches));
  std::set_difference(reference.begin(), reference.end(), kw.begin(), kw.end(),
                      std::back_inserter(r.missing));
  r.equal_as_pair_sets = r.mismatches.empty() && r.missing.empty();
  return r;
}

}  // namespace hexmatch

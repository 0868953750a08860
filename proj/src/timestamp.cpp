// Copyright 2026 The dpdfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "timestamp.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dpdfg {
namespace {

constexpr std::int64_t kNsPerSecond = 1'000'000'000;
constexpr std::int64_t kSecondsPerDay = 86'400;

// Proleptic Gregorian calendar conversions (H. Hinnant's algorithms).
constexpr std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
  std::int64_t year;
  unsigned month;
  unsigned day;
};

constexpr Civil civil_from_days(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp < 10 ? mp + 3 : mp - 9;
  return {y + (m <= 2), m, d};
}

constexpr bool is_leap(std::int64_t y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

constexpr unsigned days_in_month(std::int64_t y, unsigned m) {
  constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : kDays[m - 1];
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  // Reads exactly `width` decimal digits.
  std::optional<unsigned> digits(std::size_t width) {
    if (pos_ + width > text_.size()) return std::nullopt;
    unsigned value = 0;
    for (std::size_t i = 0; i < width; ++i) {
      const char c = text_[pos_ + i];
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + static_cast<unsigned>(c - '0');
    }
    pos_ += width;
    return value;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<Timestamp> parse_iso8601(std::string_view text) {
  text = trim(text);
  Cursor in(text);

  bool negative_year = in.accept('-');
  const auto year = in.digits(4);
  if (!year || !in.accept('-')) return std::nullopt;
  const auto month = in.digits(2);
  if (!month || !in.accept('-')) return std::nullopt;
  const auto day = in.digits(2);
  if (!day) return std::nullopt;

  const std::int64_t y = negative_year ? -static_cast<std::int64_t>(*year) : *year;
  if (*month < 1 || *month > 12) return std::nullopt;
  if (*day < 1 || *day > days_in_month(y, *month)) return std::nullopt;

  unsigned hour = 0, minute = 0, second = 0;
  std::int64_t fraction_ns = 0;
  std::int64_t offset_seconds = 0;

  if (!in.done()) {
    if (!in.accept('T') && !in.accept('t') && !in.accept(' ')) return std::nullopt;
    const auto h = in.digits(2);
    if (!h || !in.accept(':')) return std::nullopt;
    const auto mi = in.digits(2);
    if (!mi) return std::nullopt;
    hour = *h;
    minute = *mi;
    if (in.accept(':')) {
      const auto s = in.digits(2);
      if (!s) return std::nullopt;
      second = *s;
      if (in.accept('.') || in.accept(',')) {
        std::int64_t scale = 100'000'000;
        bool any = false;
        while (in.peek() >= '0' && in.peek() <= '9') {
          fraction_ns += (in.peek() - '0') * scale;
          scale /= 10;
          in.advance();
          any = true;
        }
        if (!any) return std::nullopt;
      }
    }
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;

    if (in.accept('Z') || in.accept('z')) {
      // UTC
    } else if (in.peek() == '+' || in.peek() == '-') {
      const int sign = in.peek() == '-' ? -1 : 1;
      in.advance();
      const auto oh = in.digits(2);
      if (!oh) return std::nullopt;
      unsigned om = 0;
      if (in.accept(':')) {
        const auto m = in.digits(2);
        if (!m) return std::nullopt;
        om = *m;
      } else if (!in.done()) {
        const auto m = in.digits(2);
        if (!m) return std::nullopt;
        om = *m;
      }
      if (*oh > 23 || om > 59) return std::nullopt;
      offset_seconds = sign * static_cast<std::int64_t>(*oh * 3600 + om * 60);
    }
    if (!in.done()) return std::nullopt;
  }

  const std::int64_t days = days_from_civil(y, *month, *day);
  const std::int64_t seconds = days * kSecondsPerDay + hour * 3600 + minute * 60 +
                               second - offset_seconds;
  constexpr std::int64_t kMaxSeconds =
      std::numeric_limits<std::int64_t>::max() / kNsPerSecond - 1;
  if (seconds > kMaxSeconds || seconds < -kMaxSeconds) return std::nullopt;
  return Timestamp{seconds * kNsPerSecond + fraction_ns};
}

std::optional<Timestamp> parse_numeric_timestamp(std::string_view text,
                                                 TimeUnit unit) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  const double ns = value * static_cast<double>(nanoseconds_per(unit));
  if (std::fabs(ns) >= 9.2e18) return std::nullopt;
  return Timestamp{std::llround(ns)};
}

std::string format_iso8601(Timestamp ts) {
  std::int64_t seconds = ts.ns / kNsPerSecond;
  std::int64_t fraction = ts.ns % kNsPerSecond;
  if (fraction < 0) {
    fraction += kNsPerSecond;
    seconds -= 1;
  }
  std::int64_t days = seconds / kSecondsPerDay;
  std::int64_t rem = seconds % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    days -= 1;
  }
  const Civil c = civil_from_days(days);
  char buf[64];
  const char* sign = c.year < 0 ? "-" : "";
  std::snprintf(buf, sizeof buf, "%s%04lld-%02u-%02uT%02lld:%02lld:%02lld.%09lldZ", sign,
                static_cast<long long>(c.year < 0 ? -c.year : c.year), c.month, c.day,
                static_cast<long long>(rem / 3600), static_cast<long long>(rem / 60 % 60),
                static_cast<long long>(rem % 60), static_cast<long long>(fraction));
  return buf;
}

}  // namespace dpdfg

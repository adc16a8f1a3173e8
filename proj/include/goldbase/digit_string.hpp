#pragma once

#include "goldbase/quadratic.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace goldbase {

/// Finite map exponent -> non-negative digit, with implied zeros elsewhere.
///
/// Stored densely: digits_[k] is the digit at exponent offset_ + k, and both
/// ends of digits_ are non-zero (an empty vector is the zero string). Equal
/// strings therefore have equal storage.
class DigitString {
 public:
  using Digit = std::uint32_t;

  DigitString() = default;
  explicit DigitString(Base base) : base_(base) {}

  Base base() const { return base_; }
  bool empty() const { return digits_.empty(); }

  Digit digit(int exponent) const {
    if (digits_.empty() || exponent < offset_) return 0;
    const auto k = static_cast<std::size_t>(exponent - offset_);
    return k < digits_.size() ? digits_[k] : 0;
  }

  void set(int exponent, Digit value) {
    if (value == 0) {
      if (digit(exponent) != 0) {
        digits_[static_cast<std::size_t>(exponent - offset_)] = 0;
        trim();
      }
      return;
    }
    slot(exponent) = value;
  }

  void add(int exponent, Digit value) {
    if (value != 0) slot(exponent) += value;
  }

  /// Requires digit(exponent) >= value.
  void subtract(int exponent, Digit value) {
    const Digit current = digit(exponent);
    if (current < value) throw std::logic_error("DigitString: digit would become negative");
    set(exponent, current - value);
  }

  /// Highest exponent carrying a non-zero digit; 0 for the empty string.
  int left_index() const { return digits_.empty() ? 0 : offset_ + static_cast<int>(digits_.size()) - 1; }

  /// min(0, lowest exponent carrying a non-zero digit). Integer-valued strings
  /// report 0 so that "1.0" has R = 0.
  int right_index() const { return digits_.empty() ? 0 : std::min(0, offset_); }

  /// Lowest exponent carrying a non-zero digit. Requires !empty().
  int lowest_exponent() const { return offset_; }

  /// Visits (exponent, digit) for every non-zero digit, lowest exponent first.
  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    for (std::size_t k = 0; k < digits_.size(); ++k) {
      if (digits_[k] != 0) fn(offset_ + static_cast<int>(k), digits_[k]);
    }
  }

  Digit max_digit() const {
    return digits_.empty() ? 0 : *std::max_element(digits_.begin(), digits_.end());
  }

  std::uint64_t digit_sum() const {
    std::uint64_t s = 0;
    for (Digit d : digits_) s += d;
    return s;
  }

  friend bool operator==(const DigitString& x, const DigitString& y) {
    return x.base_ == y.base_ && x.offset_ == y.offset_ && x.digits_ == y.digits_;
  }

 private:
  Digit& slot(int exponent) {
    if (digits_.empty()) {
      offset_ = exponent;
      digits_.push_back(0);
    } else if (exponent < offset_) {
      digits_.insert(digits_.begin(), static_cast<std::size_t>(offset_ - exponent), 0);
      offset_ = exponent;
    } else if (exponent - offset_ >= static_cast<int>(digits_.size())) {
      digits_.resize(static_cast<std::size_t>(exponent - offset_ + 1), 0);
    }
    return digits_[static_cast<std::size_t>(exponent - offset_)];
  }

  void trim() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
    std::size_t lead = 0;
    while (lead < digits_.size() && digits_[lead] == 0) ++lead;
    if (lead == digits_.size()) {
      digits_.clear();
      offset_ = 0;
      return;
    }
    digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<int>(lead);
  }

  Base base_ = Base::phi;
  int offset_ = 0;
  std::vector<Digit> digits_;
};

/// Exact value sum_i d_i * theta^i, theta = phi or 1 + sqrt 2.
template <class Int = BigInt>
BasicQuadInt<Int> eval_digits(const DigitString& rep) {
  BasicQuadInt<Int> total{Int(0), Int(0), rep.base()};
  rep.for_each_nonzero([&](int e, DigitString::Digit d) {
    total += power<Int>(rep.base(), e) * Int(d);
  });
  return total;
}

/// Pointwise digit sum. Digits of the result may exceed the admissible range.
inline DigitString add_digitwise(const DigitString& x, const DigitString& y) {
  if (x.base() != y.base()) throw std::invalid_argument("add_digitwise: mixed bases");
  DigitString out = x;
  y.for_each_nonzero([&](int e, DigitString::Digit d) { out.add(e, d); });
  return out;
}

// ---------------------------------------------------------------------------
// Text form: digits, one radix point, at least one digit on each side.
// Digits above 9 are written in brackets, e.g. "1[12]0.01".

enum class RadixGlyph { middot, dot };

inline constexpr std::string_view kMiddot = "\xC2\xB7";  // U+00B7

inline std::string_view glyph_text(RadixGlyph glyph) {
  return glyph == RadixGlyph::middot ? kMiddot : std::string_view(".");
}

namespace detail {
inline void append_digit(std::string& out, DigitString::Digit d) {
  if (d <= 9) {
    out.push_back(static_cast<char>('0' + d));
  } else {
    out += '[' + std::to_string(d) + ']';
  }
}
}  // namespace detail

inline std::string render(const DigitString& rep, RadixGlyph glyph = RadixGlyph::middot) {
  std::string out;
  const int top = std::max(rep.left_index(), 0);
  for (int e = top; e >= 0; --e) detail::append_digit(out, rep.digit(e));
  out += glyph_text(glyph);
  const int bottom = rep.right_index();
  if (bottom == 0) {
    out.push_back('0');
  } else {
    for (int e = -1; e >= bottom; --e) detail::append_digit(out, rep.digit(e));
  }
  return out;
}

/// Parses the text form. Accepts "." or the middle dot as radix point.
/// Throws std::invalid_argument on anything malformed.
inline DigitString parse(std::string_view text, Base base = Base::phi) {
  std::vector<DigitString::Digit> integer_part;
  std::vector<DigitString::Digit> fraction_part;
  bool seen_point = false;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse: " + why + " in \"" + std::string(text) + "\"");
  };
  while (i < text.size()) {
    const char c = text[i];
    DigitString::Digit d = 0;
    if (c >= '0' && c <= '9') {
      d = static_cast<DigitString::Digit>(c - '0');
      ++i;
    } else if (c == '[') {
      const std::size_t close = text.find(']', i);
      if (close == std::string_view::npos || close == i + 1) fail("unterminated digit group");
      for (std::size_t k = i + 1; k < close; ++k) {
        if (text[k] < '0' || text[k] > '9') fail("bad digit group");
        d = d * 10 + static_cast<DigitString::Digit>(text[k] - '0');
      }
      i = close + 1;
    } else if (c == '.' || text.substr(i, kMiddot.size()) == kMiddot) {
      if (seen_point) fail("multiple radix points");
      seen_point = true;
      i += (c == '.') ? 1 : kMiddot.size();
      continue;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    (seen_point ? fraction_part : integer_part).push_back(d);
  }
  if (!seen_point) fail("missing radix point");
  if (integer_part.empty() || fraction_part.empty()) fail("empty side of radix point");

  DigitString rep(base);
  const int n = static_cast<int>(integer_part.size());
  for (int k = 0; k < n; ++k) rep.set(n - 1 - k, integer_part[static_cast<std::size_t>(k)]);
  for (std::size_t k = 0; k < fraction_part.size(); ++k) rep.set(-1 - static_cast<int>(k), fraction_part[k]);
  return rep;
}

// ---------------------------------------------------------------------------
// JSON form: {"base":"phi","digits":{"1":1,"-2":1}}

inline nlohmann::json to_json(const DigitString& rep) {
  nlohmann::json digits = nlohmann::json::object();
  rep.for_each_nonzero([&](int e, DigitString::Digit d) { digits[std::to_string(e)] = d; });
  return {{"base", to_string(rep.base())}, {"digits", digits}};
}

inline DigitString digit_string_from_json(const nlohmann::json& j) {
  const std::string base_name = j.at("base").get<std::string>();
  Base base;
  if (base_name == "phi") {
    base = Base::phi;
  } else if (base_name == "silver") {
    base = Base::silver;
  } else {
    throw std::invalid_argument("digit_string_from_json: unknown base " + base_name);
  }
  DigitString rep(base);
  for (const auto& [key, value] : j.at("digits").items()) {
    const long long d = value.get<long long>();
    if (d < 0) throw std::invalid_argument("digit_string_from_json: negative digit");
    std::size_t used = 0;
    const int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("digit_string_from_json: bad exponent " + key);
    rep.set(e, static_cast<DigitString::Digit>(d));
  }
  return rep;
}

inline std::ostream& operator<<(std::ostream& os, const DigitString& rep) { return os << render(rep); }

}  // namespace goldbase

// Copyright 2026 The twoxtwo Authors
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

#ifndef TWOXTWO_RATIONAL_HPP_
#define TWOXTWO_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "twoxtwo/errors.hpp"

namespace twoxtwo {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers. The value is
// always kept in lowest terms with a positive denominator. Values whose
// numerator and denominator fit in 64 bits are stored inline and computed
// with 128-bit intermediates; anything larger falls back to cpp_rational.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (value > static_cast<T>(kMax)) {
        big_ = Backing(BigInt(value));
        return;
      }
    }
    if constexpr (std::is_signed_v<T> && sizeof(T) >= sizeof(std::int64_t)) {
      if (value == static_cast<T>(kMin)) {
        big_ = Backing(BigInt(value));
        return;
      }
    }
    num_ = static_cast<std::int64_t>(value);
  }

  Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    if (denominator < 0) {
      assign(Backing(BigInt(-numerator), BigInt(-denominator)));
    } else {
      assign(Backing(numerator, denominator));
    }
  }

  // Accepts integers ("-3", "+1"), decimals ("0.25", ".4", "5.") and
  // fractions ("2/3", "-7/4"). Decimals are read as exact decimal fractions.
  static Rational parse(std::string_view text);

  BigInt numerator() const {
    return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
  }
  BigInt denominator() const {
    return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
  }

  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return big_ ? denominator() == 1 : den_ == 1; }

  double to_double() const {
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "num/den", or just "num" for integers.
  std::string to_string() const {
    std::string out = numerator().str();
    const BigInt den = denominator();
    if (den != 1) {
      out += '/';
      out += den.str();
    }
    return out;
  }

  Rational operator-() const {
    Rational out;
    if (big_ || num_ == kMin) {
      out.assign(Backing(-backing()));
    } else {
      out.num_ = -num_;
      out.den_ = den_;
    }
    return out;
  }

  Rational& operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
      set_small(static_cast<Wide>(num_) * rhs.den_ + static_cast<Wide>(rhs.num_) * den_,
                static_cast<Wide>(den_) * rhs.den_);
    } else {
      assign(backing() + rhs.backing());
    }
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
      set_small(static_cast<Wide>(num_) * rhs.den_ - static_cast<Wide>(rhs.num_) * den_,
                static_cast<Wide>(den_) * rhs.den_);
    } else {
      assign(backing() - rhs.backing());
    }
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
      set_small(static_cast<Wide>(num_) * rhs.num_, static_cast<Wide>(den_) * rhs.den_);
    } else {
      assign(backing() * rhs.backing());
    }
    return *this;
  }
  Rational& operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    if (!big_ && !rhs.big_) {
      Wide n = static_cast<Wide>(num_) * rhs.den_;
      Wide d = static_cast<Wide>(den_) * rhs.num_;
      if (d < 0) {
        n = -n;
        d = -d;
      }
      set_small(n, d);
    } else {
      assign(backing() / rhs.backing());
    }
    return *this;
  }

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  // Representations are canonical, so equal values compare field-wise.
  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    if (lhs.big_ || rhs.big_) {
      return lhs.big_ && rhs.big_ && *lhs.big_ == *rhs.big_;
    }
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = 0;
    if (!lhs.big_ && !rhs.big_) {
      const Wide a = static_cast<Wide>(lhs.num_) * rhs.den_;
      const Wide b = static_cast<Wide>(rhs.num_) * lhs.den_;
      c = (a > b) - (a < b);
    } else {
      c = lhs.backing().compare(rhs.backing());
    }
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Backing = boost::multiprecision::cpp_rational;
  using Wide = __int128;
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  static Wide gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static BigInt to_big(Wide v) {
    const bool negative = v < 0;
    unsigned __int128 m =
        negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(m >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(m);
    return negative ? BigInt(-out) : out;
  }

  // Stores n/d (d > 0), reducing and promoting to the big form if needed.
  void set_small(Wide n, Wide d) {
    const Wide g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    if (n > kMax || n <= kMin || d > kMax) {
      big_ = Backing(to_big(n), to_big(d));
      return;
    }
    big_.reset();
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  void assign(Backing value) {
    const BigInt n = boost::multiprecision::numerator(value);
    const BigInt d = boost::multiprecision::denominator(value);
    if (n > kMin && n <= kMax && d <= kMax) {
      big_.reset();
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
    } else {
      big_ = std::move(value);
    }
  }

  Backing backing() const { return big_ ? *big_ : Backing(num_, den_); }

  // Small form in (num_, den_) unless big_ is set; never both meaningful.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::optional<Backing> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

inline BigInt digits_to_int(std::string_view s) {
  BigInt out = 0;
  for (char c : s) out = out * 10 + (c - '0');
  return out;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  auto bad = [&]() { return FormatError("malformed rational literal '" + original + "'"); };
  if (text.empty()) throw bad();
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw bad();

  BigInt num;
  BigInt den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto top = text.substr(0, slash);
    const auto bottom = text.substr(slash + 1);
    if (top.empty() || bottom.empty() || !detail::all_digits(top) || !detail::all_digits(bottom)) {
      throw bad();
    }
    num = detail::digits_to_int(top);
    den = detail::digits_to_int(bottom);
    if (den == 0) throw bad();
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !detail::all_digits(whole) ||
        !detail::all_digits(frac)) {
      throw bad();
    }
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = detail::digits_to_int(whole) * den + detail::digits_to_int(frac);
  } else {
    if (!detail::all_digits(text)) throw bad();
    num = detail::digits_to_int(text);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace twoxtwo

#endif  // TWOXTWO_RATIONAL_HPP_

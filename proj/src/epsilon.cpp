// Copyright 2026 The MSPEC Authors
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

#include "mspec/epsilon.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "mspec/error.hpp"

namespace mspec {

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 62;

[[noreturn]] void bad(std::string_view text) {
  throw InvalidInput("epsilon must be a positive rational, got '" + std::string(text) + "'");
}

}  // namespace

Epsilon Epsilon::ratio(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw InvalidInput("epsilon must be positive");
  const std::int64_t g = std::gcd(num, den);
  return Epsilon(num / g, den / g);
}

Epsilon Epsilon::parse(std::string_view text) {
  if (text.empty()) bad(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    auto a = text.substr(0, slash);
    auto b = text.substr(slash + 1);
    auto ra = std::from_chars(a.data(), a.data() + a.size(), num);
    auto rb = std::from_chars(b.data(), b.data() + b.size(), den);
    if (ra.ec != std::errc{} || ra.ptr != a.data() + a.size() || rb.ec != std::errc{} ||
        rb.ptr != b.data() + b.size() || num <= 0 || den <= 0) {
      bad(text);
    }
    return ratio(num, den);
  }

  // Decimal mantissa with optional exponent.
  std::size_t i = 0;
  if (text[i] == '+') ++i;
  __int128 num = 0;
  std::int64_t scale = 0;  // value = num * 10^scale
  bool digits = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !after_point) {
      after_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
      num = num * 10 + (c - '0');
      if (num >= kLimit) bad(text);
      if (after_point) --scale;
    } else {
      break;
    }
  }
  if (!digits) bad(text);
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad(text);
    std::int64_t exp = 0;
    auto rest = text.substr(i + 1);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto r = std::from_chars(rest.data(), rest.data() + rest.size(), exp);
    if (r.ec != std::errc{} || r.ptr != rest.data() + rest.size() || exp > 30 || exp < -30) bad(text);
    scale += exp;
  }
  if (num <= 0) bad(text);
  __int128 den = 1;
  for (; scale > 0; --scale) {
    num *= 10;
    if (num >= kLimit) bad(text);
  }
  for (; scale < 0; ++scale) {
    den *= 10;
    if (den >= kLimit) bad(text);
  }
  return ratio(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string Epsilon::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Epsilon::ceil_div(std::int64_t k) const {
  if (k < 0) throw InvalidInput("ceil_div of a negative count");
  const __int128 top = static_cast<__int128>(k) * den_;
  const __int128 q = (top + num_ - 1) / num_;
  if (q > kLimit) throw LimitExceeded("copy count overflows");
  return static_cast<std::int64_t>(q);
}

}  // namespace mspec

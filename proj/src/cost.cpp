#include "khop/cost.hpp"

#include <cctype>

namespace khop {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InfeasibleLabeling: return "InfeasibleLabeling";
    case ErrorKind::NotAKHopTree: return "NotAKHopTree";
    case ErrorKind::NotAPathOrder: return "NotAPathOrder";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidNetTree: return "InvalidNetTree";
    case ErrorKind::InfeasibleInstance: return "InfeasibleInstance";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

Cost Cost::from_integer(std::int64_t units) {
  std::int64_t r;
  if (__builtin_mul_overflow(units, kScale, &r))
    throw Error(ErrorKind::Precondition, "integer cost out of range");
  return Cost::from_scaled(r);
}

std::string Cost::to_decimal() const {
  if (is_infinite()) return "inf";
  std::int64_t q = v_ / kScale;
  std::int64_t r = v_ % kScale;
  std::string out = std::to_string(q);
  if (r != 0) {
    std::string frac = std::to_string(r);
    frac.insert(frac.begin(), 6 - frac.size(), '0');
    while (frac.back() == '0') frac.pop_back();
    out += '.';
    out += frac;
  }
  return out;
}

namespace {

Cost parse_decimal_impl(const std::string& text) {
  if (text.empty())
    throw Error(ErrorKind::ParseError, "empty decimal literal");
  std::size_t i = 0;
  std::int64_t intpart = 0;
  bool any_digit = false;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::ParseError, "bad decimal literal: " + text);
    any_digit = true;
    if (__builtin_mul_overflow(intpart, 10, &intpart) ||
        __builtin_add_overflow(intpart, text[i] - '0', &intpart))
      throw Error(ErrorKind::ParseError, "decimal literal out of range: " + text);
  }
  if (!any_digit)
    throw Error(ErrorKind::ParseError, "bad decimal literal: " + text);
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    ++i;  // skip '.'
    if (i == text.size())
      throw Error(ErrorKind::ParseError, "bad decimal literal: " + text);
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(ErrorKind::ParseError, "bad decimal literal: " + text);
      if (++frac_digits > 6)
        throw Error(ErrorKind::ParseError,
                    "more than six fractional digits: " + text);
      frac = frac * 10 + (text[i] - '0');
    }
    for (int d = frac_digits; d < 6; ++d) frac *= 10;
  }
  std::int64_t scaled;
  if (__builtin_mul_overflow(intpart, Cost::kScale, &scaled) ||
      __builtin_add_overflow(scaled, frac, &scaled))
    throw Error(ErrorKind::ParseError, "decimal literal out of range: " + text);
  return Cost::from_scaled(scaled);
}

}  // namespace

Cost parse_weight(const std::string& text) {
  Cost c = parse_decimal_impl(text);
  if (c.scaled() <= 0)
    throw Error(ErrorKind::NonPositiveWeight, "weight must be positive: " + text);
  return c;
}

Cost parse_cost_decimal(const std::string& text) { return parse_decimal_impl(text); }

}  // namespace khop

#ifndef KHOP_COST_HPP
#define KHOP_COST_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace khop {

// Error kinds surfaced by the library. Each carries a human-readable message;
// the kind is stable and used by the CLI for exit codes and by tests.
enum class ErrorKind {
  DisconnectedGraph,
  NonPositiveWeight,
  EmptySet,
  InfeasibleLabeling,
  NotAKHopTree,
  NotAPathOrder,
  InvalidDecomposition,
  TooLarge,
  InvalidNetTree,
  InfeasibleInstance,
  ParseError,
  ClassMismatch,
  Precondition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

// Exact edge/tree cost. Weights are parsed from decimal literals with at most
// six fractional digits and held as integers scaled by 10^6, so all additions
// and comparisons downstream are exact. Adding infinity saturates; adding two
// finite values that would overflow is a hard error rather than silent wrap.
class Cost {
 public:
  static constexpr std::int64_t kScale = 1000000;

  constexpr Cost() : v_(0) {}
  static constexpr Cost infinity() { return Cost(kInf, Raw{}); }
  static constexpr Cost zero() { return Cost(0, Raw{}); }
  static constexpr Cost from_scaled(std::int64_t scaled) {
    return Cost(scaled, Raw{});
  }
  static Cost from_integer(std::int64_t units);

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::int64_t scaled() const { return v_; }

  Cost operator+(Cost o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    std::int64_t r;
    if (__builtin_add_overflow(v_, o.v_, &r) || r == kInf)
      throw Error(ErrorKind::Precondition, "cost addition overflow");
    return Cost(r, Raw{});
  }
  Cost& operator+=(Cost o) { return *this = *this + o; }

  // Finite subtraction, used only by certificate accounting.
  Cost operator-(Cost o) const {
    if (is_infinite() || o.is_infinite())
      throw Error(ErrorKind::Precondition, "cost subtraction on infinity");
    return Cost(v_ - o.v_, Raw{});
  }

  friend constexpr bool operator==(Cost a, Cost b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Cost a, Cost b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Cost a, Cost b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Cost a, Cost b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Cost a, Cost b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Cost a, Cost b) { return a.v_ >= b.v_; }

  // Renders the exact decimal value, trailing zeros trimmed: 4, 2.5, 0.000001.
  std::string to_decimal() const;

 private:
  struct Raw {};
  constexpr Cost(std::int64_t v, Raw) : v_(v) {}
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t v_;
};

// Parses a positive decimal weight literal ("3", "0.25", "10.000001").
// Rejects non-positive values, more than six fractional digits, and anything
// that does not fit the scaled 64-bit range.
Cost parse_weight(const std::string& text);

// Parses a nonnegative decimal cost literal (solution files may carry 0).
Cost parse_cost_decimal(const std::string& text);

}  // namespace khop

#endif

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace saddle {

/// Raised when a caller violates an operation's precondition (non-square
/// input, empty index set, undersized active set, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an algorithm detects a state its correctness argument rules
/// out. Seeing one means there is a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An entry of the ordered domain. The payload is only ever copied and
/// compared; ordering goes through an `Order`, never through the payload
/// directly, so that reflected views can reverse it.
struct Value {
  double raw = 0.0;

  friend bool operator==(Value, Value) = default;
};

/// 0-based coordinates in the root matrix.
struct Position {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// A matrix entry reported to callers: root coordinates plus its value.
struct Entry {
  Position pos;
  Value value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// The closed PSP interval [C, R]: C is the largest column minimum and R the
/// smallest row maximum.
struct Interval {
  Value lo;  // C
  Value hi;  // R
};

/// Query and comparison tallies for one root matrix. Each root owns its own
/// counters; they are not synchronized, so a root must not be queried from
/// several threads at once.
struct Counters {
  std::uint64_t queries = 0;
  std::uint64_t comparisons = 0;
};

/// Counting comparator for values read through a view. Reflected views hand
/// out an Order with `reversed` set. An Order must not outlive the root
/// matrix whose counters it points to.
class Order {
 public:
  Order(Counters* counters, bool reversed) : counters_(counters), reversed_(reversed) {}

  [[nodiscard]] bool reversed() const { return reversed_; }

  [[nodiscard]] bool less(Value a, Value b) const {
    ++counters_->comparisons;
    return reversed_ ? b.raw < a.raw : a.raw < b.raw;
  }
  [[nodiscard]] bool less_equal(Value a, Value b) const { return !less(b, a); }
  [[nodiscard]] bool greater(Value a, Value b) const { return less(b, a); }
  [[nodiscard]] bool greater_equal(Value a, Value b) const { return !less(a, b); }

  // One comparison: equality is orientation independent.
  [[nodiscard]] bool equal(Value a, Value b) const {
    ++counters_->comparisons;
    return a.raw == b.raw;
  }

  [[nodiscard]] std::weak_ordering compare(Value a, Value b) const {
    if (less(a, b)) return std::weak_ordering::less;
    if (less(b, a)) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  [[nodiscard]] Value min(Value a, Value b) const { return less(b, a) ? b : a; }
  [[nodiscard]] Value max(Value a, Value b) const { return less(a, b) ? b : a; }

  /// Strict-weak-ordering functor for the standard algorithms.
  [[nodiscard]] auto comparator() const {
    return [*this](Value a, Value b) { return less(a, b); };
  }

 private:
  Counters* counters_;
  bool reversed_;
};

std::string to_string(Value v);

}  // namespace saddle

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dsc {

/// A class label: a non-negative integer or the undefined mark `*`.
///
/// Star orders after every defined value, which is also the canonical order
/// used by the class file format.
class Label {
 public:
  using value_type = std::uint32_t;

  static constexpr value_type kMaxValue = std::numeric_limits<value_type>::max() - 1;

  constexpr Label() = default;

  constexpr explicit Label(value_type value) : raw_(value) {
    if (value > kMaxValue) throw std::out_of_range("label value too large");
  }

  static constexpr Label star() {
    Label l;
    l.raw_ = kStarRaw;
    return l;
  }

  constexpr bool is_star() const { return raw_ == kStarRaw; }
  constexpr bool is_defined() const { return raw_ != kStarRaw; }

  /// Precondition: is_defined().
  constexpr value_type value() const { return raw_; }

  constexpr auto operator<=>(const Label&) const = default;

 private:
  static constexpr value_type kStarRaw = std::numeric_limits<value_type>::max();
  value_type raw_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Label l) {
  if (l.is_star()) return os << '*';
  return os << l.value();
}

}  // namespace dsc

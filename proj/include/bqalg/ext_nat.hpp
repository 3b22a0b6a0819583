#ifndef BQALG_EXT_NAT_HPP_
#define BQALG_EXT_NAT_HPP_

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

namespace bqalg {

  // A natural number or infinity; infinity compares greater than everything.
  class ExtNat {
   public:
    constexpr ExtNat() noexcept = default;
    constexpr ExtNat(std::size_t value) noexcept  // NOLINT(runtime/explicit)
        : _value(value) {}

    static constexpr ExtNat infinity() noexcept {
      ExtNat x;
      x._infinite = true;
      return x;
    }

    [[nodiscard]] constexpr bool is_infinite() const noexcept {
      return _infinite;
    }
    [[nodiscard]] constexpr bool is_finite() const noexcept {
      return !_infinite;
    }
    // Undefined for infinity.
    [[nodiscard]] constexpr std::size_t value() const noexcept {
      return _value;
    }

    [[nodiscard]] std::string to_string() const {
      return _infinite ? "inf" : std::to_string(_value);
    }

    constexpr bool operator==(ExtNat const& that) const noexcept {
      return _infinite == that._infinite && (_infinite || _value == that._value);
    }
    constexpr std::strong_ordering operator<=>(ExtNat const& that) const noexcept {
      if (_infinite || that._infinite) {
        return _infinite <=> that._infinite;
      }
      return _value <=> that._value;
    }

    // inf + x = inf
    constexpr ExtNat operator+(std::size_t k) const noexcept {
      return _infinite ? *this : ExtNat(_value + k);
    }

   private:
    std::size_t _value    = 0;
    bool        _infinite = false;
  };

  inline std::ostream& operator<<(std::ostream& os, ExtNat const& x) {
    return os << x.to_string();
  }

}  // namespace bqalg

#endif  // BQALG_EXT_NAT_HPP_

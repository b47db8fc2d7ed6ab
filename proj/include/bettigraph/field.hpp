#ifndef BETTIGRAPH_FIELD_HPP
#define BETTIGRAPH_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bettigraph {

/// Coefficient field for homology: the rationals (characteristic 0) or a
/// prime field F_p with p < 2^31. Defaults to F_2, the fastest exact choice.
struct FieldSpec {
  std::uint32_t characteristic = 2;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::uint32_t p);
  static FieldSpec parse(std::int64_t value); // 0 or a prime

  bool is_rational() const { return characteristic == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t p);

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("FieldSpec: " + std::to_string(p) +
                                " is not a prime below 2^31");
  return FieldSpec{p};
}

inline FieldSpec FieldSpec::parse(std::int64_t value) {
  if (value == 0) return rationals();
  if (value < 0 || value >= (std::int64_t{1} << 31))
    throw std::invalid_argument("FieldSpec: characteristic out of range");
  return prime(static_cast<std::uint32_t>(value));
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace bettigraph

#endif

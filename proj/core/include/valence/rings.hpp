#ifndef VALENCE_RINGS_HPP
#define VALENCE_RINGS_HPP

#include <cstdint>
#include <string>

#include "valence/errors.hpp"

// Coefficient domains are value types with +, -, *, unary -, == and the
// free functions zero_like / one_like / is_zero (and divexact where an
// operation needs exact division). The "like" argument supplies runtime
// context such as a field descriptor; plain integers ignore it.

namespace valence {

inline std::int64_t zero_like(std::int64_t) { return 0; }
inline std::int64_t one_like(std::int64_t) { return 1; }
inline bool is_zero(std::int64_t a) { return a == 0; }
inline std::int64_t divexact(std::int64_t a, std::int64_t b) {
  if (b == 0) throw domain_error(errc::division_by_zero, "divexact by zero");
  if (a % b != 0) throw domain_error(errc::invalid_input, "division is not exact");
  return a / b;
}
inline std::string to_coeff_string(std::int64_t a) { return std::to_string(a); }

template <class T>
std::string to_coeff_string(const T& a) {
  return a.to_string();
}

}  // namespace valence

#endif

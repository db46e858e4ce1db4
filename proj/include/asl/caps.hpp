#ifndef ASL_CAPS_HPP
#define ASL_CAPS_HPP

#include <cstdint>

namespace asl {

// Resource limits. All exhaustive operations check them up front and fail
// loudly rather than sampling; exact results are either complete or absent.
struct Caps {
  // largest admissible field size p^(e*k) for make_field
  std::uint64_t field_size_cap = std::uint64_t(1) << 40;
  // largest field/polynomial family that may be enumerated exhaustively
  std::uint64_t enumeration_cap = std::uint64_t(1) << 20;
  // elementary character evaluations allowed per oracle operation
  std::uint64_t work_limit = 100'000'000;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace asl

#endif

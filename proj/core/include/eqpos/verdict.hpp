#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace eqpos {

inline constexpr const char* kModelCurveTag = "model-curve verdict";
inline constexpr const char* kGkmVerifiedTag = "gkm-verified";

/// A curve on which a positivity test fails, with the offending least degree.
struct Witness {
  std::string curve;
  std::int64_t degree;
};

struct Verdict {
  bool holds = false;
  std::optional<Witness> witness;
  /// False when the invariant-curve set could not be certified complete; the
  /// verdict then only covers the model curves.
  bool gkm_ok = true;

  const char* tag() const { return gkm_ok ? kGkmVerifiedTag : kModelCurveTag; }
};

struct SeshadriValue {
  std::int64_t value = 0;
  std::string attained_on;
  bool gkm_ok = true;

  const char* tag() const { return gkm_ok ? kGkmVerifiedTag : kModelCurveTag; }
};

}  // namespace eqpos

#ifndef LEL_VERSION_HPP
#define LEL_VERSION_HPP

namespace lel {

// Stamped into cache records; a mismatch invalidates cached fractions.
inline constexpr const char* kEngineVersion = "lel/0.1.0";

}  // namespace lel

#endif

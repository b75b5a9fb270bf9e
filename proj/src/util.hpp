#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace gk {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy shared by the whole library.  The C API maps these to codes,
// the CLI maps them to exit statuses.
enum class errc {
  invalid_argument,  // bad dimensions, violated preconditions
  parse_error,       // malformed input text (carries line/column)
  cap_exceeded,      // configurable resource limit hit
  unsupported,       // request outside the engine's envelope
  internal,          // invariant breakage; always a bug
};

class gk_error : public std::runtime_error {
 public:
  gk_error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw gk_error(code, what); }

// Resource caps.  Every potentially explosive computation takes one of
// these; defaults are sized for desk-scale runs and can be raised from the
// CLI (--max-elements, --max-norm, --max-fiber).
struct Caps {
  std::uint64_t max_elements = 1'000'000;   // completion: stored basis elements
  Int max_norm = 10'000;                    // completion: 1-norm of any stored element
  std::uint64_t max_fiber = 1'000'000;      // fiber enumeration: point count; also DP states
  std::uint64_t max_queue = 300'000'000;    // completion: pending pair records
  int threads = 0;                          // 0 = honor GRAVERKIT_THREADS (default 1)
};

// FNV-1a 64-bit, used to pin transcription checksums inside data files.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline int env_thread_limit() {
  const char* s = std::getenv("GRAVERKIT_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1 || v > 1024)
    fail(errc::invalid_argument, "GRAVERKIT_THREADS must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace gk

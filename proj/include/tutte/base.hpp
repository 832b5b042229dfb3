#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tutte {

// Dense handles into the arenas of PlanarGraph.  kNone marks "absent"
// everywhere (empty rotation slot, interior vertex's gap, unset corner).
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;
using DartId = std::int32_t;
using NodeId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

enum class Errc {
  NotPlanar,
  BadOuterFace,
  Disconnected,
  NotExterior,
  NotOnFace,
  AlreadyAdjacentOnFace,
  InvalidNoose,
  Not2Connected,
  Not3Connected,
  NotABridge,
  PreconditionViolated,
  NotASimplePath,
  NoNecklace,
  TooLarge,
  InsufficientData,
  BadInput,
  UnknownFamily,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

// Expensive self-checks (frame rebuild comparison, embedding audits) are
// gated on this flag.  Cheap structural asserts stay on unconditionally.
bool debug_checks();
void set_debug_checks(bool on);

// Checks precondition violations attributable to the caller.
#define TUTTE_CHECK(cond, code, what)     \
  do {                                    \
    if (!(cond)) ::tutte::fail(code, what); \
  } while (0)

// Checks internal invariants; failure means a bug, not bad input.
#define TUTTE_IASSERT(cond, what)                       \
  do {                                                  \
    if (!(cond)) ::tutte::fail(::tutte::Errc::Internal, what); \
  } while (0)

// All randomized generators and tests draw from this so runs are
// reproducible from a single seed.  below() uses rejection sampling, so a
// given seed yields the same instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) fail(Errc::Internal, "Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  std::int32_t below_i(std::int32_t n) {
    return static_cast<std::int32_t>(below(static_cast<std::uint64_t>(n)));
  }

  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tutte

#include "tutte/base.hpp"

#include <cstdlib>

namespace tutte {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPlanar: return "not_planar";
    case Errc::BadOuterFace: return "bad_outer_face";
    case Errc::Disconnected: return "disconnected";
    case Errc::NotExterior: return "not_exterior";
    case Errc::NotOnFace: return "not_on_face";
    case Errc::AlreadyAdjacentOnFace: return "already_adjacent_on_face";
    case Errc::InvalidNoose: return "invalid_noose";
    case Errc::Not2Connected: return "not_2_connected";
    case Errc::Not3Connected: return "not_3_connected";
    case Errc::NotABridge: return "not_a_bridge";
    case Errc::PreconditionViolated: return "precondition_violated";
    case Errc::NotASimplePath: return "not_a_simple_path";
    case Errc::NoNecklace: return "no_necklace";
    case Errc::TooLarge: return "too_large";
    case Errc::InsufficientData: return "insufficient_data";
    case Errc::BadInput: return "bad_input";
    case Errc::UnknownFamily: return "unknown_family";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

namespace {

bool read_debug_env() {
  const char* v = std::getenv("TUTTE_DEBUG");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

bool g_debug = read_debug_env();

}  // namespace

bool debug_checks() { return g_debug; }
void set_debug_checks(bool on) { g_debug = on; }

}  // namespace tutte

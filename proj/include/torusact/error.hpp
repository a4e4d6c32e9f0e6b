#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusact {

  enum class errc {
    not_hyperbolic,
    negative_trace,
    not_power_of_two,
    bad_profile,
    not_coprime,
    not_verified,
    length_mismatch,
    not_closed,
    not_embedded,
    malformed_graph,
    bad_input,
    parse_error,
    non_dyadic,
    invalid_lift
  };

  constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
      case errc::not_hyperbolic: return "NotHyperbolic";
      case errc::negative_trace: return "NegativeTrace";
      case errc::not_power_of_two: return "NotPowerOfTwo";
      case errc::bad_profile: return "BadProfile";
      case errc::not_coprime: return "NotCoprime";
      case errc::not_verified: return "NotVerified";
      case errc::length_mismatch: return "LengthMismatch";
      case errc::not_closed: return "NotClosed";
      case errc::not_embedded: return "NotEmbedded";
      case errc::malformed_graph: return "MalformedGraph";
      case errc::bad_input: return "BadInput";
      case errc::parse_error: return "ParseError";
      case errc::non_dyadic: return "NonDyadic";
      case errc::invalid_lift: return "InvalidLift";
    }
    return "Unknown";
  }

  // Every failure raised by the library carries one of the codes above; the
  // CLI maps them onto exit codes.
  class error : public std::runtime_error {
   public:
    error(errc code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    errc code() const noexcept {
      return _code;
    }

   private:
    errc _code;
  };

  [[noreturn]] inline void raise(errc code, std::string const& what) {
    throw error(code, what);
  }

}  // namespace torusact

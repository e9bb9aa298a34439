#pragma once

#include <stdexcept>
#include <string>

namespace corrcancel {

// Every failure mode the engine can report.  CLI exit codes and scenario
// reports map onto these names, so keep them stable.
enum class ErrorCode {
    NotDominant,
    NotPrime,
    NotFinite,
    UnsupportedBase,
    UnsupportedField,
    WrongDimension,
    NotFlat,
    NotProperOnSupport,
    NotEquidimensional,
    ImproperIntersection,
    ZeroRestriction,
    SearchExhausted,
    DegenerateCoordinates,
    InvalidArgument,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace corrcancel

#pragma once

#include <stdexcept>
#include <string>

namespace trisph {

// Domain error kinds surfaced by the library.  The CLI maps any Error to
// exit code 1; usage problems (bad flags) are handled by the parser and
// exit with 2.
enum class Err {
  MalformedFace,
  NotASphere,
  CapExceeded,
  OutOfRange,
  FaceNotPresent,
  InvalidGluing,
  NotABelt,
  InvalidSplit,
  UnknownName,
  NotRealizable,
  IncompleteCensus,
  CorruptDatabase,
};

const char* err_name(Err kind);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg),
        kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace trisph

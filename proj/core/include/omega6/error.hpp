#pragma once

#include <stdexcept>
#include <string>

namespace omega6 {

enum class Errc {
  NotSymmetric,
  NotUnimodular,
  Degenerate,
  DimensionMismatch,
  NotCharacteristic,
  Mod8Violation,
  NotEven,
  DuplicateName,
  MuMismatch,
  UnknownRohlin,
  DifferentUnderlyingEmbedding,
  SyntaxError,
  DuplicateVertex,
  UnknownVertex,
  SelfLoop,
  DuplicateEdge,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace omega6

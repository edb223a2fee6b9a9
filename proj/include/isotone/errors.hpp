#pragma once

#include <stdexcept>
#include <string>

namespace isotone {

enum class Errc {
  invalid_argument = 1,
  dimension_mismatch = 2,
  parse = 3,
  unsupported = 4,
  no_convergence = 5,
  assertion_failed = 6,
  internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace isotone

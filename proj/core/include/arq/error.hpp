#pragma once

#include <stdexcept>
#include <string>

namespace arq {

enum class ErrorKind {
  Input,         // malformed spec or precondition on user data
  Budget,        // dimension/count/depth cap hit
  Inconclusive,  // randomized search failed with no certificate
  Falsified,     // a checked statement came out false
  Unsupported,   // non-split block, small field, non-basic algebra
  Internal
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::Internal, msg);
}

}  // namespace arq

#pragma once

#include <stdexcept>
#include <string>

namespace limitsets {

/// Base class for every error raised by the library. The kind selects the
/// CLI exit code (parse/config errors exit 2, analysis errors exit 3).
class Error : public std::runtime_error {
 public:
  enum class Kind {
    parse,
    precondition,
    empty_subshift,
    inconsistency,
    out_of_side,
    non_stabilized,
    delta_too_large,
    not_chain_transitive,
    budget,
    domain,
    unsupported_piece,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }
  bool is_input_error() const noexcept { return kind_ == Kind::parse; }

 private:
  Kind kind_;
};

inline const char* kind_name(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::parse: return "parse";
    case Error::Kind::precondition: return "precondition";
    case Error::Kind::empty_subshift: return "empty-subshift";
    case Error::Kind::inconsistency: return "inconsistency";
    case Error::Kind::out_of_side: return "out-of-side";
    case Error::Kind::non_stabilized: return "non-stabilized";
    case Error::Kind::delta_too_large: return "delta-too-large";
    case Error::Kind::not_chain_transitive: return "not-chain-transitive";
    case Error::Kind::budget: return "budget";
    case Error::Kind::domain: return "domain";
    case Error::Kind::unsupported_piece: return "unsupported-piece";
  }
  return "unknown";
}

[[noreturn]] inline void fail(Error::Kind kind, const std::string& what) {
  throw Error(kind, std::string(kind_name(kind)) + ": " + what);
}

}  // namespace limitsets

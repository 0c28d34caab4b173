#pragma once

#include <stdexcept>
#include <string>

namespace ppcalc {

enum class Errc {
  axiom_violation,
  functoriality_violation,
  naturality_violation,
  sort_mismatch,
  domain_mismatch,
  side_mismatch,
  arity_error,
  not_a_pair,
  not_mono,
  not_epi,
  rejected_morphism,
  parse_error,
  size_limit,
  bad_input,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

const char* errc_name(Errc c);

}  // namespace ppcalc

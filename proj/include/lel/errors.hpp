#ifndef LEL_ERRORS_HPP
#define LEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lel {

enum class Errc {
  not_closed,
  not_simple,
  empty_input,
  bad_step,
  quadrature_not_converged,
  sap_does_not_fit,
  length_too_large,
  zero_density,
  corrupt_record,
  insufficient_data,
  precision_insufficient,
  open_walk_no_last,
  division_by_zero,
  bad_input,
};

const char* errc_name(Errc c);

// Domain-level failure. The CLI maps these to exit code 1; usage errors
// (bad flags) exit with 2 and never reach this type.
class DomainError : public std::runtime_error {
public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace lel

#endif

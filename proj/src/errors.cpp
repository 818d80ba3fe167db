#include "lel/errors.hpp"

namespace lel {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_closed: return "not_closed";
    case Errc::not_simple: return "not_simple";
    case Errc::empty_input: return "empty_input";
    case Errc::bad_step: return "bad_step";
    case Errc::quadrature_not_converged: return "quadrature_not_converged";
    case Errc::sap_does_not_fit: return "sap_does_not_fit";
    case Errc::length_too_large: return "length_too_large";
    case Errc::zero_density: return "zero_density";
    case Errc::corrupt_record: return "corrupt_record";
    case Errc::insufficient_data: return "insufficient_data";
    case Errc::precision_insufficient: return "precision_insufficient";
    case Errc::open_walk_no_last: return "open_walk_no_last";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::bad_input: return "bad_input";
  }
  return "unknown";
}

}  // namespace lel

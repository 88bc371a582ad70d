#pragma once

#include <stdexcept>
#include <string>

namespace pathlat {

enum class errc {
  nonzero_endpoint,
  below_axis,
  illegal_step,
  unpaired_flat,
  family_mismatch,
  closure_violation,
  size_limit_exceeded,
  non_integral_rank,
  not_comparable,
  not_in_lattice,
  spectrum_not_ranked,
  not_coprime,
  not_quasi_join_irreducible,
  no_closed_form,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::nonzero_endpoint: return "NonzeroEndpoint";
    case errc::below_axis: return "BelowAxis";
    case errc::illegal_step: return "IllegalStep";
    case errc::unpaired_flat: return "UnpairedFlat";
    case errc::family_mismatch: return "FamilyMismatch";
    case errc::closure_violation: return "ClosureViolation";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::non_integral_rank: return "NonIntegralRank";
    case errc::not_comparable: return "NotComparable";
    case errc::not_in_lattice: return "NotInLattice";
    case errc::spectrum_not_ranked: return "SpectrumNotRanked";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_quasi_join_irreducible: return "NotQuasiJoinIrreducible";
    case errc::no_closed_form: return "NoClosedForm";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw error(code, msg); }

// Internal invariant failures. These indicate a bug, not bad input.
#define PATHLAT_REQUIRE(cond, msg) \
  do {                             \
    if (!(cond)) throw std::logic_error(std::string("pathlat internal: ") + (msg)); \
  } while (0)

}  // namespace pathlat

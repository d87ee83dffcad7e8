#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// All library failures derive from Error; kind() is a stable tag used by the
// CLI and by tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define HECKE_ERROR(KIND)                                              \
  struct KIND : Error {                                                \
    explicit KIND(const std::string& w = "") : Error(#KIND, w) {}      \
  }

HECKE_ERROR(NotGCM);
HECKE_ERROR(LatticeOutOfRange);
HECKE_ERROR(NotInTitsCone);
HECKE_ERROR(NotSpherical);
HECKE_ERROR(DatumMismatch);
HECKE_ERROR(SymbolMismatch);
HECKE_ERROR(NotMonomialUnit);
HECKE_ERROR(FractionalExponentAtSpecialization);
HECKE_ERROR(TermOverflow);
HECKE_ERROR(ArithmeticOverflow);
HECKE_ERROR(NotPositivePart);
HECKE_ERROR(PeelStalled);
HECKE_ERROR(NotDominant);
HECKE_ERROR(OmegaNotAdmitted);
HECKE_ERROR(NotAffineType);
HECKE_ERROR(NotFiniteType);
HECKE_ERROR(DepthExceeded);
HECKE_ERROR(MuNotRegular);
HECKE_ERROR(LambdaNotSpherical);
HECKE_ERROR(NotCentrifugallyFolded);
HECKE_ERROR(ParseError);

#undef HECKE_ERROR

}  // namespace hecke

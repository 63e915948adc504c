#pragma once

#include <stdexcept>
#include <string>

namespace pivctr {

class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(kind) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define PIVCTR_ERROR(Name)                                               \
  struct Name : Error {                                                  \
    explicit Name(const std::string& what = "") : Error(#Name, what) {} \
  }

PIVCTR_ERROR(DivisionByZero);
PIVCTR_ERROR(IncompatibleRootOrders);
PIVCTR_ERROR(OrderNotDividing);
PIVCTR_ERROR(RootOutsideField);
PIVCTR_ERROR(ParseError);
PIVCTR_ERROR(ShapeMismatch);
PIVCTR_ERROR(NotInvertible);
PIVCTR_ERROR(InconsistentBlockRatio);
PIVCTR_ERROR(ZeroComponent);
PIVCTR_ERROR(InvalidComodule);
PIVCTR_ERROR(InvalidCenterObject);
PIVCTR_ERROR(NoMatch);
PIVCTR_ERROR(NotMonoidalInput);
PIVCTR_ERROR(HopfModuleViolation);
PIVCTR_ERROR(CocycleViolation);
PIVCTR_ERROR(IncompleteEnumeration);
PIVCTR_ERROR(NotPointed);
PIVCTR_ERROR(InfiniteSolutionSet);
PIVCTR_ERROR(GroupTooLarge);

#undef PIVCTR_ERROR

}  // namespace pivctr

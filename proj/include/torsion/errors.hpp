#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace torsion {

/// Base of every error raised by the library. `kind()` is the stable,
/// machine-readable name used in CLI error JSON; `rule()` optionally names
/// the reachability rule that explains a rejected request.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message, std::string rule = {})
        : std::runtime_error(message), rule_(std::move(rule)) {}

    virtual const char* kind() const noexcept = 0;
    const std::string& rule() const noexcept { return rule_; }

private:
    std::string rule_;
};

#define TORSION_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                        \
    public:                                                            \
        using Error::Error;                                            \
        const char* kind() const noexcept override { return #Name; }   \
    };

TORSION_DEFINE_ERROR(InvalidInput)
TORSION_DEFINE_ERROR(PreconditionError)
TORSION_DEFINE_ERROR(HypothesisError)
TORSION_DEFINE_ERROR(DivisibilityError)
TORSION_DEFINE_ERROR(GcdError)
TORSION_DEFINE_ERROR(DegreeError)
TORSION_DEFINE_ERROR(OrderError)
TORSION_DEFINE_ERROR(RepeatedRootError)
TORSION_DEFINE_ERROR(ZeroOrdinateError)
TORSION_DEFINE_ERROR(SearchExhausted)
TORSION_DEFINE_ERROR(UnsupportedField)
TORSION_DEFINE_ERROR(UnsupportedDegree)
TORSION_DEFINE_ERROR(InternalError)

#undef TORSION_DEFINE_ERROR

} // namespace torsion

#pragma once

#include <stdexcept>
#include <string>

namespace qsolv {

// Every library failure derives from Error so callers can catch one type
// and still report the specific kind through name().
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& name() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QSOLV_ERROR_TYPE(T)                                                  \
    class T : public Error {                                                 \
    public:                                                                  \
        explicit T(const std::string& what) : Error(#T, what) {}             \
    };

QSOLV_ERROR_TYPE(DenominatorVanishes)
QSOLV_ERROR_TYPE(InvalidArgument)
QSOLV_ERROR_TYPE(SupportViolation)
QSOLV_ERROR_TYPE(CapExceeded)
QSOLV_ERROR_TYPE(BoundExceeded)
QSOLV_ERROR_TYPE(NotGammaSplit)
QSOLV_ERROR_TYPE(TailShapeViolation)
QSOLV_ERROR_TYPE(NotSkew)
QSOLV_ERROR_TYPE(SizeLimit)
QSOLV_ERROR_TYPE(InadmissibleL)
QSOLV_ERROR_TYPE(NotCentral)
QSOLV_ERROR_TYPE(NonDivisible)
QSOLV_ERROR_TYPE(DegenerateChart)
QSOLV_ERROR_TYPE(FieldExtensionRequired)
QSOLV_ERROR_TYPE(LiftingFailed)
QSOLV_ERROR_TYPE(RootExtractionFailed)
QSOLV_ERROR_TYPE(ParseError)

#undef QSOLV_ERROR_TYPE

}  // namespace qsolv

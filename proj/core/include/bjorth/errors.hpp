#pragma once

#include <stdexcept>
#include <string>

namespace bjorth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define BJORTH_DEFINE_ERROR(Name)                      \
    struct Name : Error {                              \
        explicit Name(const std::string& msg = #Name)  \
            : Error(msg) {}                            \
    }

BJORTH_DEFINE_ERROR(NonFinite);
BJORTH_DEFINE_ERROR(NonHermitian);
BJORTH_DEFINE_ERROR(NonSquare);
BJORTH_DEFINE_ERROR(ShapeMismatch);
BJORTH_DEFINE_ERROR(ZeroMatrix);
BJORTH_DEFINE_ERROR(ZeroVector);
BJORTH_DEFINE_ERROR(ZeroElement);
BJORTH_DEFINE_ERROR(NonPositiveGauge);
BJORTH_DEFINE_ERROR(DegenerateParams);
BJORTH_DEFINE_ERROR(NotInForm);
BJORTH_DEFINE_ERROR(NotMember);
BJORTH_DEFINE_ERROR(InvalidShape);
BJORTH_DEFINE_ERROR(SizeViolation);
BJORTH_DEFINE_ERROR(GaugeViolation);
BJORTH_DEFINE_ERROR(NotRankOnePreserving);
BJORTH_DEFINE_ERROR(AmbiguousFit);
BJORTH_DEFINE_ERROR(ParseError);

#undef BJORTH_DEFINE_ERROR

} // namespace bjorth

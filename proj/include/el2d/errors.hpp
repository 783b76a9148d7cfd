#ifndef EL2D_ERRORS_HPP
#define EL2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace el2d {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coefficient construction
struct ParodiViolation : Error { using Error::Error; };
struct NonpositiveGamma1 : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct NotSymmetricTraceFree : Error { using Error::Error; };

// fields / geometry
struct BadParams : Error { using Error::Error; };
struct RadiusTooLarge : Error { using Error::Error; };

// stepping
struct NonFinite : Error {
    explicit NonFinite(const std::string& msg, double t = -1.0) : Error(msg), time(t) {}
    double time;
};
struct UnitDrift : Error {
    explicit UnitDrift(const std::string& msg, double t = -1.0) : Error(msg), time(t) {}
    double time;
};

// diagnostics
struct EmptySeries : Error { using Error::Error; };

// configuration
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
    int line;
};
struct ValidationError : Error { using Error::Error; };
struct UnknownPreset : Error { using Error::Error; };

} // namespace el2d

#endif

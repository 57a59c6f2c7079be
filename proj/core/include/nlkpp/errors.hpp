#pragma once

#include <stdexcept>
#include <string>

namespace nlkpp {

/// Base class for all solver and harness errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// b/h is not a whole number of cells.
class NonIntegralRatio : public Error {
public:
    using Error::Error;
};

/// Snapshot or initial-condition file unreadable or ill-shaped.
class FileError : public Error {
public:
    using Error::Error;
};

/// L^k norm requested with k < 1.
class InvalidOrder : public Error {
public:
    using Error::Error;
};

/// Field dipped below the clamping threshold with a fractional exponent.
class NegativePower : public Error {
public:
    using Error::Error;
};

/// Thomas elimination hit a vanishing pivot (ill-posed sweep).
class ZeroPivot : public Error {
public:
    using Error::Error;
};

/// Max norm exceeded the abort level or the field went non-finite.
class BlowupDetected : public Error {
public:
    BlowupDetected(const std::string& msg, double t) : Error(msg), time(t) {}
    double time;
};

/// Explicit oracle step size violates the diffusion CFL bound.
class CflViolation : public Error {
public:
    using Error::Error;
};

/// Paired-run initial masses differ beyond tolerance.
class MassMismatch : public Error {
public:
    using Error::Error;
};

/// Too few samples in the requested fit window.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// A check was handed an empty series.
class EmptySeries : public Error {
public:
    using Error::Error;
};

/// Convergence-study runs do not form a valid refinement ladder.
class MisalignedRuns : public Error {
public:
    using Error::Error;
};

/// Config text could not be parsed; carries the offending line number.
class ParseError : public Error {
public:
    ParseError(int line_no, const std::string& reason)
        : Error("line " + std::to_string(line_no) + ": " + reason), line(line_no) {}
    int line;
};

/// Config parsed but violates a range or consistency rule.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Preset name not in the catalogue.
class UnknownPreset : public Error {
public:
    using Error::Error;
};

} // namespace nlkpp

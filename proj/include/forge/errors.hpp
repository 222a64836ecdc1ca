#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// Base class for all toolchain errors. Subclasses map onto the CLI
// exit-code contract (see tools/forge).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid domain configuration (flume geometry, schedule, profile, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Invalid argument to an operation (bad fractions, empty subset, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed input file; carries a 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_ = 0;
};

// Training failed (divergence); names the epoch it happened in.
class TrainingError : public Error {
public:
    TrainingError(const std::string& msg, int epoch)
        : Error(msg + " (epoch " + std::to_string(epoch) + ")"), epoch_(epoch) {}
    int epoch() const { return epoch_; }

private:
    int epoch_ = 0;
};

// Quantization calibration failed; names the offending layer.
class CalibrationError : public Error {
public:
    CalibrationError(const std::string& msg, int layer)
        : Error(msg + " (layer " + std::to_string(layer) + ")"), layer_(layer) {}
    int layer() const { return layer_; }

private:
    int layer_ = 0;
};

// Value outside the representable range of a fixed-point encoding.
class RangeError : public Error {
public:
    using Error::Error;
};

// Design does not fit the selected FPGA target.
class FitError : public Error {
public:
    using Error::Error;
};

} // namespace forge

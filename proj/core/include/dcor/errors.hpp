#pragma once

#include <stdexcept>
#include <string>

namespace dcor {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument outside the documented domain (x <= 0 for ln_gamma,
// parameter outside its validated range, ...). The message names the
// violated range.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A series hit its term/diagonal cap before the stop rule was satisfied.
// Carries the best partial sum so callers can inspect or salvage it.
struct SeriesEvaluation;  // fwd (series.hpp)

class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, double partial_value,
                        double tail_bound, long terms_used)
        : Error(what), partial_value(partial_value), tail_bound(tail_bound),
          terms_used(terms_used) {}
    double partial_value;
    double tail_bound;
    long terms_used;
};

// Matrix-index enumeration would exceed the configured term-count limit.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(what) {}
};

// Quadrature tail estimate exceeds 10% of the computed value.
class TailDominanceError : public Error {
public:
    TailDominanceError(const std::string& what, double value, double tail)
        : Error(what), value(value), tail(tail) {}
    double value;
    double tail;
};

// No sampler exists for the requested joint law.
class UnsupportedSamplerError : public Error {
public:
    explicit UnsupportedSamplerError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace dcor

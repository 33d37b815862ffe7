#ifndef PDMDIRAC_ERRORS_HPP
#define PDMDIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdmdirac {

/// Thrown when nu^2 <= 0: the effective centrifugal strength has collapsed
/// (falling-to-center regime) and the closed-form solution ceases to exist.
class NoRealSolution : public std::runtime_error {
public:
    explicit NoRealSolution(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when the energy equation has no root satisfying the bound-state
/// existence conditions. `condition()` names the first failed one.
class NoBoundState : public std::runtime_error {
public:
    enum class Condition { NuSquaredPositive, EpsilonSquaredPositive, MinusDeltaSquaredPositive };

    NoBoundState(Condition c, const std::string& what)
        : std::runtime_error(what), condition_(c) {}

    Condition condition() const { return condition_; }

    const char* condition_name() const {
        switch (condition_) {
            case Condition::NuSquaredPositive: return "nu^2 > 0";
            case Condition::EpsilonSquaredPositive: return "eps^2 > 0";
            case Condition::MinusDeltaSquaredPositive: return "-delta^2 > 0";
        }
        return "?";
    }

private:
    Condition condition_;
};

/// Thrown by the wave-function evaluator when the first-order relation's
/// denominator vanishes at the requested radius.
class SingularPoint : public std::runtime_error {
public:
    SingularPoint(double r, const std::string& what) : std::runtime_error(what), r_(r) {}
    double radius() const { return r_; }

private:
    double r_;
};

/// Thrown by the adaptive quadrature when the tolerance could not be met;
/// carries the best estimate obtained so far.
class AccuracyNotReached : public std::runtime_error {
public:
    AccuracyNotReached(double estimate, double error, const std::string& what)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}
    double estimate() const { return estimate_; }
    double error_estimate() const { return error_; }

private:
    double estimate_;
    double error_;
};

} // namespace pdmdirac

#endif

#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "breakline/errors.hpp"

namespace breakline {

enum class Curvature { Concave, StrictlyConcave, Convex, StrictlyConvex, Unknown };

constexpr bool is_concave(Curvature c) {
    return c == Curvature::Concave || c == Curvature::StrictlyConcave;
}

constexpr bool is_convex(Curvature c) {
    return c == Curvature::Convex || c == Curvature::StrictlyConvex;
}

constexpr bool is_strict(Curvature c) {
    return c == Curvature::StrictlyConcave || c == Curvature::StrictlyConvex;
}

/// Concave <-> Convex with strictness preserved; Unknown stays Unknown.
constexpr Curvature mirrored(Curvature c) {
    switch (c) {
        case Curvature::Concave: return Curvature::Convex;
        case Curvature::StrictlyConcave: return Curvature::StrictlyConvex;
        case Curvature::Convex: return Curvature::Concave;
        case Curvature::StrictlyConvex: return Curvature::StrictlyConcave;
        case Curvature::Unknown: break;
    }
    return Curvature::Unknown;
}

const char* to_string(Curvature c);

/// Open or half-open real interval on which a function is defined.
/// Infinite endpoints are permitted.
struct Domain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_closed = false;
    bool hi_closed = false;

    static Domain all_reals() { return {}; }
    static Domain open(double lo, double hi) { return {lo, hi, false, false}; }
    static Domain left_closed(double lo, double hi) { return {lo, hi, true, false}; }

    bool contains(double x) const {
        const bool lo_ok = lo_closed ? x >= lo : x > lo;
        const bool hi_ok = hi_closed ? x <= hi : x < hi;
        return lo_ok && hi_ok;
    }
};

/// Closed working interval [lo, hi] with lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) {
            throw DomainViolation("interval requires lo < hi, got [" + std::to_string(lo_) +
                                  ", " + std::to_string(hi_) + "]");
        }
    }

    double width() const { return hi - lo; }
};

using RealFn = std::function<double(double)>;

/// An evaluable scalar function with its domain, curvature tag, and optional
/// derivative / antiderivative. Immutable after construction; all members are
/// safe to call concurrently.
class ScalarFunction {
public:
    ScalarFunction(std::string name, RealFn eval, Domain domain, Curvature curvature,
                   std::optional<RealFn> derivative = std::nullopt,
                   std::optional<RealFn> antiderivative = std::nullopt)
        : name_(std::move(name)),
          eval_(std::move(eval)),
          derivative_(std::move(derivative)),
          antiderivative_(std::move(antiderivative)),
          curvature_(curvature),
          domain_(domain) {}

    double operator()(double x) const { return eval_(x); }

    bool has_derivative() const { return derivative_.has_value(); }
    bool has_antiderivative() const { return antiderivative_.has_value(); }

    double derivative(double x) const { return (*derivative_)(x); }
    double antiderivative(double x) const { return (*antiderivative_)(x); }

    const std::string& name() const { return name_; }
    Curvature curvature() const { return curvature_; }
    const Domain& domain() const { return domain_; }

    bool contains(const Interval& iv) const {
        return domain_.contains(iv.lo) && domain_.contains(iv.hi);
    }

    /// Copy with an explicitly asserted curvature tag. This is the caller's
    /// declaration that the function really has that curvature; the optimality
    /// guarantees are void if the assertion is false.
    ScalarFunction assuming_curvature(Curvature c) const {
        ScalarFunction copy = *this;
        copy.curvature_ = c;
        return copy;
    }

private:
    std::string name_;
    RealFn eval_;
    std::optional<RealFn> derivative_;
    std::optional<RealFn> antiderivative_;
    Curvature curvature_;
    Domain domain_;
};

}  // namespace breakline

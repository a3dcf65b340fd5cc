#include "breakline/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace breakline {

const char* to_string(Curvature c) {
    switch (c) {
        case Curvature::Concave: return "concave";
        case Curvature::StrictlyConcave: return "strictly_concave";
        case Curvature::Convex: return "convex";
        case Curvature::StrictlyConvex: return "strictly_convex";
        case Curvature::Unknown: break;
    }
    return "unknown";
}

RealFn central_difference(RealFn f) {
    return [f = std::move(f)](double x) {
        const double h = std::max(1e-6, 1e-8 * std::abs(x));
        return (f(x + h) - f(x - h)) / (2.0 * h);
    };
}

ScalarFunction make_function(std::string name, RealFn eval, Domain domain, Curvature curvature,
                             std::optional<RealFn> derivative,
                             std::optional<RealFn> antiderivative, bool synthesize_derivative) {
    if (!derivative && synthesize_derivative) {
        derivative = central_difference(eval);
    }
    return ScalarFunction(std::move(name), std::move(eval), domain, curvature,
                          std::move(derivative), std::move(antiderivative));
}

namespace {

// Parses "power(p)" and returns p, or nullopt when the name has another shape.
std::optional<double> parse_power_exponent(const std::string& name) {
    constexpr const char* prefix = "power(";
    if (name.size() < 8 || name.compare(0, 6, prefix) != 0 || name.back() != ')') {
        return std::nullopt;
    }
    const std::string body = name.substr(6, name.size() - 7);
    try {
        std::size_t consumed = 0;
        const double p = std::stod(body, &consumed);
        if (consumed != body.size()) return std::nullopt;
        return p;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

ScalarFunction catalog_get(const std::string& name) {
    if (name == "ln") {
        return ScalarFunction(
            "ln", [](double x) { return std::log(x); }, Domain::open(0.0, std::numeric_limits<double>::infinity()),
            Curvature::StrictlyConcave, RealFn([](double x) { return 1.0 / x; }),
            RealFn([](double x) { return x * std::log(x) - x; }));
    }
    if (name == "sqrt") {
        return ScalarFunction(
            "sqrt", [](double x) { return std::sqrt(x); },
            Domain::left_closed(0.0, std::numeric_limits<double>::infinity()),
            Curvature::StrictlyConcave, RealFn([](double x) { return 0.5 / std::sqrt(x); }),
            RealFn([](double x) { return (2.0 / 3.0) * x * std::sqrt(x); }));
    }
    if (name == "neg_square") {
        return ScalarFunction(
            "neg_square", [](double x) { return -x * x; }, Domain::all_reals(),
            Curvature::StrictlyConcave, RealFn([](double x) { return -2.0 * x; }),
            RealFn([](double x) { return -x * x * x / 3.0; }));
    }
    if (name == "x_ln_x_neg") {
        return ScalarFunction(
            "x_ln_x_neg", [](double x) { return -x * std::log(x); },
            Domain::open(0.0, std::numeric_limits<double>::infinity()), Curvature::StrictlyConcave,
            RealFn([](double x) { return -(std::log(x) + 1.0); }),
            RealFn([](double x) { return 0.25 * x * x - 0.5 * x * x * std::log(x); }));
    }
    if (name == "exp_convex") {
        return ScalarFunction(
            "exp_convex", [](double x) { return std::exp(x); }, Domain::all_reals(),
            Curvature::StrictlyConvex, RealFn([](double x) { return std::exp(x); }),
            RealFn([](double x) { return std::exp(x); }));
    }
    if (auto p = parse_power_exponent(name)) {
        if (!(*p > 0.0 && *p < 1.0)) {
            throw UnknownFunction("power(p) requires p in (0,1), got " + name);
        }
        const double exponent = *p;
        return ScalarFunction(
            name, [exponent](double x) { return std::pow(x, exponent); },
            Domain::left_closed(0.0, std::numeric_limits<double>::infinity()),
            Curvature::StrictlyConcave,
            RealFn([exponent](double x) { return exponent * std::pow(x, exponent - 1.0); }),
            RealFn([exponent](double x) { return std::pow(x, exponent + 1.0) / (exponent + 1.0); }));
    }
    throw UnknownFunction("no catalog entry named '" + name +
                          "' (known: ln, sqrt, neg_square, x_ln_x_neg, exp_convex, power(p))");
}

ScalarFunction mirror(const ScalarFunction& f) {
    if (f.curvature() == Curvature::Unknown) {
        throw CurvatureUnknown("mirror requires a known curvature tag on '" + f.name() + "'");
    }
    const std::string name =
        (!f.name().empty() && f.name()[0] == '-') ? f.name().substr(1) : "-" + f.name();

    // Copy-capture so the mirrored function stays valid independently of f.
    ScalarFunction base = f;
    RealFn eval = [base](double x) { return -base(x); };
    std::optional<RealFn> deriv;
    if (base.has_derivative()) {
        deriv = RealFn([base](double x) { return -base.derivative(x); });
    }
    std::optional<RealFn> anti;
    if (base.has_antiderivative()) {
        anti = RealFn([base](double x) { return -base.antiderivative(x); });
    }
    return ScalarFunction(name, std::move(eval), f.domain(), mirrored(f.curvature()),
                          std::move(deriv), std::move(anti));
}

}  // namespace breakline

#pragma once

#include <optional>
#include <string>

#include "breakline/scalar_function.hpp"

namespace breakline {

/// Look up a built-in function by name.
///
/// Catalog: "ln", "sqrt", "neg_square", "x_ln_x_neg", "exp_convex", and
/// "power(p)" for any p in (0,1), e.g. "power(0.6)". All entries carry an
/// analytic derivative and antiderivative plus a correct curvature tag.
///
/// Throws UnknownFunction for anything else.
ScalarFunction catalog_get(const std::string& name);

/// Build a user-supplied function. When no derivative is given and
/// `synthesize_derivative` is set, a central-difference derivative with step
/// h = max(1e-6, 1e-8*|x|) is attached; the theta solver's derivative
/// condition needs one. Curvature defaults to Unknown, which the
/// concavity-dependent operations reject until the caller overrides it via
/// ScalarFunction::assuming_curvature.
ScalarFunction make_function(std::string name, RealFn eval, Domain domain,
                             Curvature curvature = Curvature::Unknown,
                             std::optional<RealFn> derivative = std::nullopt,
                             std::optional<RealFn> antiderivative = std::nullopt,
                             bool synthesize_derivative = true);

/// Central finite-difference derivative of `f` with step h = max(1e-6, 1e-8*|x|).
RealFn central_difference(RealFn f);

/// g(x) = -f(x) with the curvature tag flipped and derivative/antiderivative
/// negated. Mirroring twice restores the original name, so catalog identity
/// (and with it the ln fast paths) survives a double mirror.
///
/// Throws CurvatureUnknown when f carries no usable curvature tag.
ScalarFunction mirror(const ScalarFunction& f);

}  // namespace breakline

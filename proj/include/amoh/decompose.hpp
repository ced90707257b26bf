#pragma once

#include <optional>

#include "amoh/rational.hpp"
#include "amoh/rational_function.hpp"

namespace amoh {

/// f = f_tilde ∘ h and g = g_tilde ∘ h with h monic, h(0) = 0, of maximal degree.
struct Decomposition {
  QPoly h;
  QPoly f_tilde;
  QPoly g_tilde;
};

/// The unique monic h with h(0) = 0 and deg h = e such that f = f̃ ∘ h,
/// or nullopt. Throws BadDegree unless e divides deg f (f nonconstant).
std::optional<QPoly> right_factor(const QPoly& f, std::size_t e);

/// The unique f̃ with f = f̃ ∘ h. Throws NotComposable.
QPoly left_cofactor(const QPoly& f, const QPoly& h);

/// Largest common inner factor of f and g. Throws TrivialAlgebra when both
/// are constant.
Decomposition common_parameter(const QPoly& f, const QPoly& g);

bool is_faithful(const QPoly& f, const QPoly& g);

}  // namespace amoh

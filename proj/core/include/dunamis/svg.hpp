#pragma once

#include "dunamis/construction.hpp"

#include <string>

namespace dunamis {

/// Renders a figure as an SVG 1.1 document.
///
/// Drawing coordinates are decimal approximations, `scale` pixels per unit
/// length. Every element keeps its exact value in metadata: points carry
/// data-exact-x / data-exact-y, segments carry their exact length and
/// circles their exact radius in data-exact, all in the "(p/q)·√k" form.
/// Throws DomainError unless scale is positive and finite.
std::string figure_to_svg(const Figure& f, double scale);

}  // namespace dunamis

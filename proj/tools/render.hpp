#pragma once

#include <string>

#include "slowcf/scfa.hpp"

namespace slowcf {

/// Hand-emitted SVG plot of the forward map: one sampled polyline per branch
/// (each branch of F is h_i^{-1} restricted to its cell), the unit box, and
/// x-axis ticks at the partition endpoints labeled with exact fractions.
/// Requires width, height >= 64.
std::string render_scfa(const Scfa& s, int width, int height);

} // namespace slowcf

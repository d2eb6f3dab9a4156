#pragma once

#include <string>

#include "designs/groups.hpp"
#include "designs/sampling.hpp"
#include "designs/starter.hpp"

namespace designs {

// One line per block: vertex rendering with the sampled part bracketed,
// e.g. the 4-cycle 0-1-5-2 sampled onto the path 0-1-5 prints [0 1 5] 2.
std::string render_row(const LabeledGraph& block, const LabeledGraph& image);

// Profile summary of any sampling.
std::string report(const SamplingMap& sm);

// Representative table of a lifted sampling, rows grouped by the orbit
// of the image.
std::string report(const LiftedSampling& ls);

// Starter table grouped by family (T1..T4).
std::string report(const TripleStarter& ts);

}  // namespace designs

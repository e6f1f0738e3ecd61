#pragma once

// OpenMP versions of the data-parallel kernels. The serial functions in
// diagram.hpp / algorithm.hpp stay the reference; tests compare the two.

#include <span>
#include <vector>

#include "trapezoid/algorithm.hpp"
#include "trapezoid/diagram.hpp"

namespace trapezoid::parallel {

// Rows of the adjacency matrix are independent; each thread fills whole rows.
IntersectionGraph intersection_graph(const TrapezoidDiagram& diagram);

// kappa for every diagram, one diagram per task.
std::vector<Count> kappa_batch(std::span<const TrapezoidDiagram> diagrams, Algorithm algorithm);

// Serial counterpart of kappa_batch.
std::vector<Count> kappa_batch_serial(std::span<const TrapezoidDiagram> diagrams, Algorithm algorithm);

int max_threads();

}  // namespace trapezoid::parallel

#pragma once

#include <string>

#include "core/lattice.hpp"

namespace pachgap {

// Canonical JSON text for a lattice. Field lattices serialize their rref
// coordinates with "derived": true (order recomputed on load); abstract
// lattices carry an explicit strict-pair list. load(serialize(L)) then
// serialize() again is byte-identical.
std::string lattice_to_json_text(const GradedLattice& L);
GradedLattice lattice_from_json_text(const std::string& text);

} // namespace pachgap

#pragma once

#include <cstdint>
#include <cstdlib>

namespace pml {

// Atom budget for materialized product alphabets. Defaults to 2^24 atoms and
// may be overridden through the PMLLAB_ATOM_BUDGET environment variable or
// set_atom_budget().
int64_t atom_budget();
void set_atom_budget(int64_t atoms);

}  // namespace pml

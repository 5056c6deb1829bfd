#pragma once

#include <string>
#include <vector>

#include "quasiq/algebra.hpp"

namespace quasiq::presets {

// Group presets: Z2, Z3, Z4, S3 (case-insensitive).
bool is_group_preset(const std::string& name);
FiniteGroup group(const std::string& name);

// Cocycle presets: "z<n>-trivial", "z<n>-nontrivial", "z<n>-q<k>" for the
// cyclic family, and "trivial:<GROUP>" for the all-ones cocycle.
bool is_cocycle_preset(const std::string& name);
Cochain3 cocycle(const std::string& name);

// Collection presets over (Z2, nontrivial cocycle) plus the loop and Hopf
// variants used by the bundled quiver data.
bool is_collection_preset(const std::string& name);
AdmissibleCollection collection(const std::string& name);
std::vector<std::string> collection_names();

// Quiver-plus-bimodule presets: the five bundled action tables
// (paper-5.3, paper-5.5, example-5.4, example-5.5, example-5.6) and the
// derived z2-hopf / z2-loop data.
bool is_algebra_preset(const std::string& name);
QuiverAlgebraData algebra_data(const std::string& name);
std::vector<std::string> algebra_names();

}  // namespace quasiq::presets

#ifndef BRAIDFORGE_DATASET_HPP
#define BRAIDFORGE_DATASET_HPP

#include <string>
#include <vector>

#include "braidforge/factorization.hpp"
#include "braidforge/incidence.hpp"

namespace braidforge {

/// Directory holding the shipped datasets; BRAIDFORGE_DATA overrides the
/// build-time default.
std::string data_dir();
std::string read_data_file(const std::string& relative);

IncidenceModel load_incidence(const std::string& name);  // "pillow" | "magician"

/// The regenerated branch-curve factorization of a dataset, assembled from
/// the parasitic blocks, the local k-point factorizations and (for the
/// magician surface) the extra branch-point factors.
Factorization load_phi(const std::string& dataset);

/// Pre-branch-point part (the magician Delta~ = prod C_j phi_j).
Factorization load_phi_prebranch(const std::string& dataset);

}  // namespace braidforge

#endif

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydsim/stark.hpp"

// Multi-channel two-atom model: the initial |90S1/2, 96S1/2> pair coupled
// to the catalogued product states in a star topology, with field-dependent
// diagonal detunings.

namespace rydsim::forster {

using stark::ChannelSpec;
using stark::PolarizabilityTable;
using stark::RydbergLevel;

struct Lifetime {
    RydbergLevel level; // j-independent (tabulated per n,l)
    double tau_us = 0.0;
};

struct Catalog {
    stark::PolarizabilityTable polarizabilities;
    std::vector<ChannelSpec> channels;    // coupled channels (floor applied)
    std::vector<ChannelSpec> rejected;    // candidates under the coupling floor
    std::vector<Lifetime> lifetimes;
    std::uint64_t fingerprint = 0;        // FNV-1a hash of the raw file bytes
    std::string source_path;

    double lifetime_us(const RydbergLevel& level) const; // throws if unknown
};

// Loads and validates the channel catalog. Every candidate's angular factor
// is recomputed from the Racah sums and must match the stored value to
// 1e-12 (CatalogMismatch otherwise). Candidates with |C3*Q| below
// coupling_floor_mhz_um3 are excluded from the coupled set.
Catalog build_catalog(const std::string& path,
                      double coupling_floor_mhz_um3 = 100.0);

// Star coupling between the initial pair and channel k at separation R:
// 2*pi*C3*Q/R^3 (angular rad/us).
double coupling(const ChannelSpec& ch, double r_um);

// Collective basis: index 0 is the initial pair, indices 1..N the channel
// final states in catalog order.
struct CollectiveBasis {
    std::vector<std::string> labels;
    std::size_t dim() const { return labels.size(); }
};
CollectiveBasis collective_basis(const Catalog& cat);

class PairHamiltonian {
  public:
    PairHamiltonian(const Catalog& cat, double r_um);

    std::size_t dim() const { return channels_.size() + 1; }
    double r_um() const { return r_um_; }

    // Fills a dim x dim row-major matrix: diagonal[0] = 0, diagonal[k] =
    // pair_detuning(ch_k, E), off-diagonal[0][k] = coupling(ch_k, R).
    void at_field(double e_field_v_cm, cplx* h) const;

    const std::vector<ChannelSpec>& channels() const { return channels_; }
    const std::vector<double>& couplings() const { return couplings_; }

  private:
    std::vector<ChannelSpec> channels_;
    std::vector<double> couplings_;   // angular
    std::vector<double> delta0_ang_;  // angular
    std::vector<double> alpha_pair_;  // ordinary MHz/(V/cm)^2
    double r_um_;
};

} // namespace rydsim::forster

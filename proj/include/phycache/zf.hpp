#pragma once

#include <stdexcept>
#include <vector>

#include "phycache/channel.hpp"
#include "phycache/units.hpp"

namespace phycache {

// Per-slot achievable rate point of each PHY mode, in data objects/slot.
// coord_rates is zero outside scheduled_set.
struct RatePair {
    std::vector<double> comp_rates;   // c^A, one entry per user
    std::vector<double> coord_rates;  // c^B, one entry per user
    std::vector<int> scheduled_set;   // users active in coordinated mode
};

struct DofSummary {
    double d_a = 0.0;  // per-user symmetric DoF, CoMP
    double d_b = 0.0;  // per-user symmetric DoF, coordinated (random scheduling)
};

struct SingularChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CoMP mode: all BSs jointly invert the composite channel (single receive
// antenna per user). The scalar power normalization makes the per-BS transmit
// power constraint binding at the worst BS.
std::vector<double> comp_zf_rates(const ChannelState& ch, double power, const UnitContext& ctx);

// Coordinated mode: each scheduled user is served by its own BS at full power
// with a unit-norm beam projected away from the co-scheduled users' channels
// toward that BS. Residual inter-cell interference enters the SINR.
std::vector<double> coordinated_zf_rates(const ChannelState& ch, const std::vector<int>& scheduled,
                                         double power, const UnitContext& ctx);

// Symmetric per-user DoF of the implemented scheme: every user carries one
// interference-free stream in CoMP; random size-|S| scheduling gives |S|/N.
DofSummary dof_summary(int n_pairs, int scheduled_users);

// Per-BS transmit powers implied by the CoMP precoder (diagnostics/tests).
std::vector<double> comp_zf_bs_powers(const ChannelState& ch, double power);

// Effective complex gain from BS-set precoder column of user `src` into user
// `dst` (tests use this to verify zero-forcing cancellation).
std::vector<std::vector<std::complex<double>>> comp_zf_effective_gains(const ChannelState& ch,
                                                                       double power);

// Norms of the scaled CoMP beam columns (leakage checks need them for
// relative tolerances).
std::vector<double> comp_zf_beam_norms(const ChannelState& ch, double power);

// Unit-norm coordinated beams, one per scheduled user in schedule order.
std::vector<std::vector<std::complex<double>>> coordinated_zf_beams(
    const ChannelState& ch, const std::vector<int>& scheduled);

}  // namespace phycache

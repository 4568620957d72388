#include "phycache/zf.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace phycache {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// composite N x (N*L_T) channel, one row per user (requires L_R = 1)
MatrixXcd composite_channel(const ChannelState& ch) {
    if (ch.lr != 1) throw std::invalid_argument("zf rates require a single receive antenna per user");
    const int n = ch.n_pairs;
    MatrixXcd h(n, n * ch.lt);
    for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b)
            for (int t = 0; t < ch.lt; ++t) h(j, b * ch.lt + t) = ch.at(j, b, 0, t);
    return h;
}

// unnormalized channel-inversion precoder V = H^H (H H^H)^{-1}
MatrixXcd comp_precoder(const MatrixXcd& h) {
    const MatrixXcd gram = h * h.adjoint();
    Eigen::LLT<MatrixXcd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw SingularChannelError("composite channel is rank deficient");
    return llt.solve(h).adjoint();  // (gram^{-1} H)^H = H^H gram^{-1}
}

double comp_power_scale(const ChannelState& ch, const MatrixXcd& v, double power) {
    const int n = ch.n_pairs;
    double worst = 0.0;
    for (int b = 0; b < n; ++b)
        worst = std::max(worst, v.middleRows(b * ch.lt, ch.lt).squaredNorm());
    if (!(worst > 0.0)) throw SingularChannelError("degenerate precoder");
    return std::sqrt(power / worst);
}

VectorXcd bs_channel_row(const ChannelState& ch, int user, int bs) {
    VectorXcd h(ch.lt);
    for (int t = 0; t < ch.lt; ++t) h(t) = ch.at(user, bs, 0, t);
    return h;
}

}  // namespace

std::vector<double> comp_zf_rates(const ChannelState& ch, double power, const UnitContext& ctx) {
    const int n = ch.n_pairs;
    const MatrixXcd h = composite_channel(ch);
    const MatrixXcd v = comp_precoder(h);
    const double xi = comp_power_scale(ch, v, power);

    const MatrixXcd eff = xi * (h * v);  // eff(j, j') = gain of user j' beam at user j
    std::vector<double> rates(n);
    for (int j = 0; j < n; ++j) {
        double interference = 0.0;
        for (int jp = 0; jp < n; ++jp)
            if (jp != j) interference += std::norm(eff(j, jp));
        const double sinr = std::norm(eff(j, j)) / (1.0 + interference);
        rates[j] = convert_rate(ctx.bandwidth_hz * std::log2(1.0 + sinr), ctx);
    }
    return rates;
}

std::vector<double> comp_zf_bs_powers(const ChannelState& ch, double power) {
    const MatrixXcd h = composite_channel(ch);
    const MatrixXcd v = comp_precoder(h);
    const double xi = comp_power_scale(ch, v, power);
    std::vector<double> powers(ch.n_pairs);
    for (int b = 0; b < ch.n_pairs; ++b)
        powers[b] = xi * xi * v.middleRows(b * ch.lt, ch.lt).squaredNorm();
    return powers;
}

std::vector<std::vector<std::complex<double>>> comp_zf_effective_gains(const ChannelState& ch,
                                                                       double power) {
    const MatrixXcd h = composite_channel(ch);
    const MatrixXcd v = comp_precoder(h);
    const double xi = comp_power_scale(ch, v, power);
    const MatrixXcd eff = xi * (h * v);
    std::vector<std::vector<std::complex<double>>> out(ch.n_pairs);
    for (int j = 0; j < ch.n_pairs; ++j) {
        out[j].resize(ch.n_pairs);
        for (int jp = 0; jp < ch.n_pairs; ++jp) out[j][jp] = eff(j, jp);
    }
    return out;
}

namespace {

// Unit-norm beams, each projected on the orthogonal complement of the
// co-scheduled users' channels toward the serving BS. The row channel h
// acts on a beam v as h^T v, so the matched direction is conj(h).
std::vector<VectorXcd> coordinated_beams(const ChannelState& ch, const std::vector<int>& scheduled) {
    if (static_cast<int>(scheduled.size()) > ch.lt)
        throw std::invalid_argument("coordinated schedule larger than the antenna count");
    if (ch.lr != 1) throw std::invalid_argument("zf rates require a single receive antenna per user");
    std::vector<VectorXcd> beams(scheduled.size());
    for (size_t i = 0; i < scheduled.size(); ++i) {
        const int j = scheduled[i];
        const VectorXcd own = bs_channel_row(ch, j, j).conjugate();
        VectorXcd beam = own;
        if (scheduled.size() > 1) {
            MatrixXcd others(ch.lt, scheduled.size() - 1);
            int col = 0;
            for (int jp : scheduled)
                if (jp != j) others.col(col++) = bs_channel_row(ch, jp, j).conjugate();
            const MatrixXcd gram = others.adjoint() * others;
            Eigen::LLT<MatrixXcd> llt(gram);
            if (llt.info() != Eigen::Success)
                throw SingularChannelError("co-scheduled channels are rank deficient");
            beam = own - others * llt.solve(others.adjoint() * own);
        }
        const double norm = beam.norm();
        if (!(norm > 1e-30)) throw SingularChannelError("zero projection in coordinated precoder");
        beams[i] = beam / norm;
    }
    return beams;
}

}  // namespace

std::vector<double> coordinated_zf_rates(const ChannelState& ch, const std::vector<int>& scheduled,
                                         double power, const UnitContext& ctx) {
    const int n = ch.n_pairs;
    const std::vector<VectorXcd> beams = coordinated_beams(ch, scheduled);

    std::vector<double> rates(n, 0.0);
    for (size_t i = 0; i < scheduled.size(); ++i) {
        const int j = scheduled[i];
        // |h^T v|^2 == |conj(h)^H v|^2
        const double sig = std::norm(bs_channel_row(ch, j, j).conjugate().dot(beams[i]));
        double interference = 0.0;
        for (size_t ip = 0; ip < scheduled.size(); ++ip) {
            if (ip == i) continue;
            const int jp = scheduled[ip];
            interference += power * std::norm(bs_channel_row(ch, j, jp).conjugate().dot(beams[ip]));
        }
        const double sinr = power * sig / (1.0 + interference);
        rates[j] = convert_rate(ctx.bandwidth_hz * std::log2(1.0 + sinr), ctx);
    }
    return rates;
}

std::vector<double> comp_zf_beam_norms(const ChannelState& ch, double power) {
    const MatrixXcd h = composite_channel(ch);
    const MatrixXcd v = comp_precoder(h);
    const double xi = comp_power_scale(ch, v, power);
    std::vector<double> norms(ch.n_pairs);
    for (int j = 0; j < ch.n_pairs; ++j) norms[j] = xi * v.col(j).norm();
    return norms;
}

std::vector<std::vector<std::complex<double>>> coordinated_zf_beams(
    const ChannelState& ch, const std::vector<int>& scheduled) {
    const std::vector<VectorXcd> beams = coordinated_beams(ch, scheduled);
    std::vector<std::vector<std::complex<double>>> out(beams.size());
    for (size_t i = 0; i < beams.size(); ++i) {
        out[i].resize(ch.lt);
        for (int t = 0; t < ch.lt; ++t) out[i][t] = beams[i](t);
    }
    return out;
}

DofSummary dof_summary(int n_pairs, int scheduled_users) {
    DofSummary s;
    s.d_a = 1.0;
    s.d_b = static_cast<double>(scheduled_users) / n_pairs;
    return s;
}

}  // namespace phycache

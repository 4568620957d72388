#include "phycache/flow_balance.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace phycache {

bool FlowBalanceReport::any_violation() const { return violation_count() > 0; }

long FlowBalanceReport::violation_count() const {
    long count = 0;
    for (const auto& g : groups)
        for (const auto& s : g.slacks)
            if (s.violation) ++count;
    return count;
}

namespace {

QueueSlack make_slack(const std::string& name, const std::vector<double>& per_frame_arrival,
                      const std::vector<double>& per_frame_service, int slots_per_frame) {
    QueueSlack s;
    s.queue = name;
    const size_t n = per_frame_arrival.size();
    double arr = 0.0, srv = 0.0, slack_sum = 0.0, slack_sq = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double a = per_frame_arrival[i] / slots_per_frame;
        const double c = per_frame_service[i] / slots_per_frame;
        arr += a;
        srv += c;
        const double d = a - c;
        slack_sum += d;
        slack_sq += d * d;
    }
    s.arrival_rate = arr / n;
    s.service_rate = srv / n;
    s.slack = slack_sum / n;
    if (n > 1) {
        const double var = std::max(0.0, (slack_sq - slack_sum * slack_sum / n) / (n - 1));
        s.std_error = std::sqrt(var / n);
    }
    // a slack has to be both statistically and materially positive to count
    s.violation = s.slack > 3.0 * s.std_error && s.slack > 1e-9;
    return s;
}

}  // namespace

FlowBalanceReport check_conditional_flow_balance(const std::vector<FrameFlowRecord>& trace,
                                                 int slots_per_frame, int min_frames) {
    if (trace.empty()) throw std::invalid_argument("flow balance: empty trace");

    std::map<std::vector<uint8_t>, std::vector<const FrameFlowRecord*>> by_state;
    for (const auto& rec : trace) by_state[rec.cache_state].push_back(&rec);

    FlowBalanceReport report;
    report.total_frames = static_cast<long>(trace.size());
    report.min_frames = min_frames;

    const size_t n_bs = trace.front().server_arrival.size();
    for (const auto& [state, frames] : by_state) {
        CacheStateGroup group;
        group.state = state;
        group.frames = static_cast<long>(frames.size());
        group.probability = static_cast<double>(frames.size()) / trace.size();
        group.excluded = group.frames < min_frames;
        if (!group.excluded) {
            std::vector<double> arr(frames.size()), srv(frames.size());
            auto collect = [&](auto getter_a, auto getter_s, size_t idx) {
                for (size_t f = 0; f < frames.size(); ++f) {
                    arr[f] = getter_a(*frames[f])[idx];
                    srv[f] = getter_s(*frames[f])[idx];
                }
            };
            for (size_t n = 0; n < n_bs; ++n) {
                collect([](const FrameFlowRecord& r) -> const std::vector<double>& { return r.server_arrival; },
                        [](const FrameFlowRecord& r) -> const std::vector<double>& { return r.server_service; }, n);
                group.slacks.push_back(
                    make_slack("server[" + std::to_string(n) + "]", arr, srv, slots_per_frame));
            }
            for (size_t n = 0; n < n_bs; ++n) {
                collect([](const FrameFlowRecord& r) -> const std::vector<double>& { return r.coord_arrival; },
                        [](const FrameFlowRecord& r) -> const std::vector<double>& { return r.coord_service; }, n);
                group.slacks.push_back(
                    make_slack("coord[" + std::to_string(n) + "]", arr, srv, slots_per_frame));
            }
            for (size_t n = 0; n < n_bs; ++n) {
                for (size_t j = 0; j < n_bs; ++j) {
                    const size_t idx = n * n_bs + j;
                    collect([](const FrameFlowRecord& r) -> const std::vector<double>& { return r.comp_arrival; },
                            [](const FrameFlowRecord& r) -> const std::vector<double>& { return r.comp_service; },
                            idx);
                    group.slacks.push_back(make_slack(
                        "comp[" + std::to_string(n) + "," + std::to_string(j) + "]", arr, srv,
                        slots_per_frame));
                }
            }
        }
        report.groups.push_back(std::move(group));
    }
    return report;
}

}  // namespace phycache

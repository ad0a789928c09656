#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linemg/elehot.hpp"
#include "linemg/graph.hpp"
#include "linemg/linegraph.hpp"

namespace linemg {

enum class ScheduleMode { RootMwm, ExactMwis, Greedy };
enum class Policy { Auto, Exact, Greedy };

std::string_view to_string(ScheduleMode mode);
Policy parse_policy(std::string_view text);

struct PipelineOptions {
  /// Largest conflict graph solved by exhaustive MWIS when elehot fails.
  std::size_t exact_limit = 25;
};

/// Network, its conflict graph and the per-slot solver chosen for it.
struct Pipeline {
  Multigraph network;
  std::size_t hops = 1;
  LineGraphResult conflict;  // gc vertex <-> network link
  ScheduleMode mode = ScheduleMode::Greedy;
  std::optional<RootResult> root;  // set iff mode == RootMwm
  Witness witness;                 // why elehot failed, under Policy::Auto
};

Pipeline build_pipeline(const Multigraph& network, std::size_t hops, Policy policy = Policy::Auto,
                        const PipelineOptions& options = {});

/// Repeatedly takes the heaviest remaining vertex (smallest id on ties) and
/// deletes its closed neighbourhood. Zero-weight vertices are never taken.
std::vector<VertexId> greedy_mwis(const SimpleGraph& gc, std::span<const Weight> weights);

/// MaxWeight schedule for one slot: links (ascending) forming an
/// independent set of the conflict graph, weighted by `queues` (one per
/// network link). Links with zero queue are never scheduled.
std::vector<EdgeId> schedule_slot(const Pipeline& p, std::span<const Weight> queues);

struct SlotRecord {
  std::vector<EdgeId> scheduled;
  std::vector<EdgeId> arrivals;
  std::int64_t served = 0;
  std::int64_t total_queue = 0;  // after service and arrivals
};

struct SlotLog {
  std::vector<SlotRecord> slots;
  std::vector<std::int64_t> final_queues;
  std::vector<std::int64_t> served_per_link;
  std::vector<std::int64_t> arrivals_per_link;
  double mean_total_queue = 0.0;
  std::int64_t final_total_queue = 0;
};

/// Slotted simulation from empty queues: each slot schedules on the current
/// queues, serves one packet per scheduled link, then draws Bernoulli
/// arrivals. Deterministic in `seed`.
SlotLog simulate(const Pipeline& p, std::span<const double> rates, std::size_t slots, std::uint64_t seed);

// ---- CSV / JSON-lines -----------------------------------------------------

/// `link_id,value` with a mandatory header; every link exactly once. `key`
/// renames the id column (e.g. `vertex_id` for vertex weights).
std::vector<Weight> parse_queue_csv(std::string_view text, std::size_t links, std::string_view key = "link_id");
std::vector<double> parse_rate_csv(std::string_view text, std::size_t links);

/// `slot,arrivals,served,total_queue`
std::string slot_totals_csv(const SlotLog& log);
/// `link_id,arrival_rate,arrivals,served,throughput,final_queue`
std::string summary_csv(const SlotLog& log, std::span<const double> rates);
/// One JSON object per slot.
std::string slot_log_jsonl(const SlotLog& log);

}  // namespace linemg

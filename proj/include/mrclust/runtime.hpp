#ifndef MRCLUST_RUNTIME_HPP
#define MRCLUST_RUNTIME_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrclust/rng.hpp"

// Deterministic simulated MapReduce engine. A job is a sequence of rounds;
// each round groups key-value pairs by key (one key per machine), invokes a
// pure reducer per key, and records per-machine input size, output size,
// measured wall time, and charged distance-word work.

namespace mrclust::mr {

// Message payload. ids and nums are the materialized content; extra_words
// accounts for data the round logically ships but the reducer re-derives from
// the shared dataset (distance blocks, one word per distance).
struct Payload {
  std::uint32_t tag = 0;
  std::vector<std::uint32_t> ids;
  std::vector<double> nums;
  std::uint64_t extra_words = 0;

  std::uint64_t words() const {
    const std::uint64_t w = ids.size() + nums.size() + extra_words;
    return w ? w : 1;
  }
};

struct KeyValue {
  int key = 0;
  Payload value;
};

struct ClusterConfig {
  int machines = 100;
  std::optional<std::uint64_t> memory_cap_words;
  std::uint64_t seed = 0;
};

struct MemoryViolationError : std::runtime_error {
  MemoryViolationError(int round, int machine, std::uint64_t used, std::uint64_t cap);
  int round;
  int machine;
};

struct MachineTrace {
  int machine = 0;
  std::uint64_t input_words = 0;
  std::uint64_t peak_words = 0;  // emitted output words
  double time_seconds = 0.0;     // measured reducer wall time
  std::uint64_t work_words = 0;  // charged distance evaluations
};

struct RoundTrace {
  int round_index = 0;
  std::vector<MachineTrace> machines;

  double max_machine_time() const;
  std::uint64_t max_machine_memory() const;  // max over input+peak
  std::uint64_t max_machine_cost() const;    // max over input+work
};

struct JobTrace {
  std::vector<RoundTrace> rounds;

  double total_time() const;               // sum of per-round max times
  std::uint64_t peak_memory() const;       // max over rounds
  std::uint64_t deterministic_cost() const;  // sum of per-round max input+work

  // Columns: round,machine,input_words,peak_words,time_seconds. With
  // deterministic_time the time column holds input+work word counts.
  void write_csv(std::ostream& out, bool deterministic_time = false) const;
};

// Handed to the reducer for one key.
class ReduceContext {
 public:
  int key() const { return key_; }
  std::uint64_t seed() const { return seed_; }
  void charge_work(std::uint64_t distance_words) { work_ += distance_words; }

 private:
  friend class Job;
  int key_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t work_ = 0;
};

// Pure function of (key, values, per-key seed); must take all randomness from
// ctx.seed() or from constants captured at construction.
using Reducer = std::function<std::vector<KeyValue>(ReduceContext& ctx,
                                                    std::span<const Payload> values)>;

class Job {
 public:
  explicit Job(ClusterConfig cfg) : cfg_(cfg) {}

  // Runs one map/shuffle/reduce round. Every input key must be a valid
  // machine index. Outputs are ordered by key, then by emission order.
  std::vector<KeyValue> run_round(std::vector<KeyValue> inputs, const Reducer& reducer);

  const ClusterConfig& config() const { return cfg_; }
  const JobTrace& trace() const { return trace_; }
  JobTrace take_trace() { return std::move(trace_); }
  int rounds_run() const { return next_round_; }

 private:
  ClusterConfig cfg_;
  JobTrace trace_;
  int next_round_ = 0;
};

// One-shot form: runs a single round under a fresh job.
std::pair<std::vector<KeyValue>, RoundTrace> run_round(const ClusterConfig& cfg,
                                                       std::vector<KeyValue> inputs,
                                                       const Reducer& reducer);

// Deterministic split into `parts` lists with sizes differing by at most one;
// the union is the input, parts are disjoint.
template <typename T>
std::vector<std::vector<T>> partition_arbitrary(std::span<const T> items,
                                                std::size_t parts, std::uint64_t seed) {
  if (parts < 1) throw std::invalid_argument("partition needs at least one part");
  std::vector<T> shuffled(items.begin(), items.end());
  Rng rng(mix_seed(seed, 0x9a7710));
  shuffle(shuffled, rng);
  std::vector<std::vector<T>> out(parts);
  const std::size_t base = shuffled.size() / parts;
  const std::size_t extra = shuffled.size() % parts;
  std::size_t pos = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t len = base + (p < extra ? 1 : 0);
    out[p].assign(shuffled.begin() + pos, shuffled.begin() + pos + len);
    pos += len;
  }
  return out;
}

}  // namespace mrclust::mr

#endif  // MRCLUST_RUNTIME_HPP

#ifndef CT_PURSUIT_HPP
#define CT_PURSUIT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ct/graph.hpp"
#include "ct/zero_forcing.hpp"

namespace ct {

// Sorted multiset of cop positions; repeated vertices allowed.
using CopConfig = std::vector<int>;

CopConfig make_cop_config(std::vector<int> positions);  // sorts and validates

struct SolveOptions {
  std::uint64_t state_budget = 50'000'000;  // (configs x robber positions) cap
  bool sets_only = false;  // restrict initial placements to plain sets
};

// Exact game values for k cops: value(C, r) is the number of rounds the cops
// need from cop multiset C and robber vertex r with both sides optimal, cops
// moving first each round. Computed by round-indexed retrograde iteration
// over all (config, robber) states; states never reached by the capture
// closure stay infinite.
class GameTable {
 public:
  GameTable(const Graph& g, int k, const SolveOptions& opts = {});

  int cop_count() const { return k_; }
  std::uint64_t config_count() const { return m_; }
  const Graph& graph() const { return g_; }

  Steps value(const CopConfig& cops, int robber) const;
  Steps capture_time_from(const CopConfig& cops) const;  // max over robber starts

  struct Placement {
    Steps rounds;
    CopConfig witness;
  };
  // min over initial placements of capture_time_from; first optimal config in
  // lexicographic order wins.
  Placement best_placement(bool sets_only) const;

  std::uint64_t rank(const CopConfig& cops) const;
  CopConfig config_at(std::uint64_t index) const;
  Steps value_at(std::uint64_t index, int robber) const;
  VertexSet config_mask(std::uint64_t index) const { return VertexSet{cfg_mask_[index]}; }

 private:
  void build();
  Steps capture_time_at(std::uint64_t index) const;

  Graph g_;
  int n_;
  int k_;
  std::uint64_t m_;
  std::vector<std::uint64_t> rank_table_;       // lex-rank prefix sums
  std::vector<std::uint8_t> configs_;           // m_ x k_ sorted tuples
  std::vector<std::uint64_t> cfg_mask_;         // occupied-vertex masks
  std::vector<std::uint64_t> succ_off_;         // per-config successor slices
  std::vector<std::uint32_t> succ_ids_;
  std::vector<std::uint16_t> val_;              // m_ x n_, 0xFFFF = infinite
};

struct PerKEntry {
  int k = 0;
  Steps k_radius_bound;        // rad_k, the capture-time lower bound
  Steps capture;               // capt_k when computed
  bool computed = false;       // false when pruned by k + rad_k >= best
  CopConfig witness;
};

struct CopThrottleResult {
  Steps value;
  int k = 0;
  CopConfig witness;
  std::vector<PerKEntry> per_k;
};

struct GameTrace {
  struct Round {
    CopConfig cops;
    int robber;
    bool captured;
  };
  CopConfig initial_cops;
  int initial_robber = -1;
  Steps rounds;
  std::vector<Round> play;  // empty when the robber evades forever
};

// Solver facade caching one GameTable per cop count.
class Pursuit {
 public:
  explicit Pursuit(Graph g, SolveOptions opts = {});

  const Graph& graph() const { return g_; }
  const GameTable& table(int k);

  Steps capture_time_of_set(const CopConfig& s);
  GameTable::Placement k_capture_time(int k);
  int cop_number();
  bool can_catch_within(int k, int p);
  CopThrottleResult cop_throttle();

  // Optimal-play transcript from the given cops against a worst-case robber.
  GameTrace replay(const CopConfig& cops);

 private:
  Graph g_;
  SolveOptions opts_;
  std::map<int, std::unique_ptr<GameTable>> tables_;
};

// Direct transcription of the quadratic two-cops-two-rounds test: scans cop
// pairs {c1, c2} (repeats allowed) and certifies that every robber start
// outside N[{c1,c2}] can be answered by moves c1', c2' with
// N[r] <= N[c1'] u N[c2']. Returns the first certified pair.
std::optional<std::pair<int, int>> algorithm2_two_in_two(const Graph& g);

// Converts a PSD forcing chronology for s into the cop strategy that chases
// the robber's component (forcing cops move to their forced vertex when the
// force lies in that component) and exactly solves the game restricted to
// that strategy. The result never exceeds the record's propagation time.
Steps psd_shadow_capture(const Graph& g, VertexSet s, const ForcingRecord& record);

}  // namespace ct

#endif

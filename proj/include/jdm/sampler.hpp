#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/instance.hpp"

namespace jdm {

// One legal switch [uv, u'v' | uv', u'v]: removes uv and u'v', adds uv' and
// u'v, with u and u' in the same class. Applying it to a realization yields
// another realization of the same instance.
struct SwitchMove {
    int u = 0, v = 0, u2 = 0, v2 = 0;

    SwitchMove inverse() const { return SwitchMove{u, v2, u2, v}; }
    bool operator==(const SwitchMove&) const = default;
};

// Throws internal_error unless the move is legal on g.
void apply_switch(LabeledGraph& g, const SwitchMove& m);

// All distinct legal switches of g, where two switches are the same iff they
// produce the same graph. Deterministically ordered.
std::vector<SwitchMove> enumerate_legal_switches(const LabeledGraph& g);

// ell(G) without materializing the moves.
std::size_t count_legal_switches(const LabeledGraph& g);

// Number of edges in the symmetric difference of the two edge sets.
std::size_t edge_difference(const LabeledGraph& a, const LabeledGraph& b);

// Seeded generator with a platform-independent stream: the raw engine is
// fully specified and the derived draws avoid std distributions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // uniform draw from [0, n)
    std::uint64_t below(std::uint64_t n);
    bool half() { return (next() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

// Counters reported with every chain run.
struct ChainStats {
    std::uint64_t steps = 0;
    std::uint64_t lazy_holds = 0;        // kept the state on the half coin
    std::uint64_t proposals = 0;
    std::uint64_t accepted = 0;
    std::uint64_t ell_min = 0, ell_max = 0;
    double ell_mean = 0.0;
    double acceptance_rate() const {
        return proposals == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(proposals);
    }
};

// Markov chain state over the realizations of one instance: the current
// graph, its cached distinct-switch list, and the RNG.
class ChainState {
  public:
    ChainState(LabeledGraph g, const JdmInstance& inst, std::uint64_t seed);

    const LabeledGraph& graph() const { return g_; }
    std::uint64_t ell() const { return switches_.size(); }
    std::uint64_t seed() const { return seed_; }
    const ChainStats& stats() const { return stats_; }

    // One lazy Metropolis step: with probability 1/2 hold; otherwise pick one
    // of the ell(G) distinct switches uniformly and accept the result with
    // probability ell(G) / (ell(G) + ell(G')).
    void step();

  private:
    LabeledGraph g_;
    JdmInstance inst_;
    std::vector<SwitchMove> switches_;
    Rng rng_;
    std::uint64_t seed_;
    ChainStats stats_;
    double ell_sum_ = 0.0;
};

using VisitHistogram = std::map<std::vector<std::pair<int, int>>, std::uint64_t>;

struct ChainRun {
    LabeledGraph final_graph;
    std::uint64_t seed = 0;
    ChainStats stats;
    VisitHistogram histogram;  // filled only when requested
};

// Run `steps` steps from g0, which must realize inst. The histogram counts
// the state after every step, keyed by canonical edge list.
ChainRun run_chain(const LabeledGraph& g0, const JdmInstance& inst, std::uint64_t steps,
                   std::uint64_t seed, bool histogram = false);

// A sequence of legal switches transforming g0 into g1, built from the
// irreducibility argument: shrink the symmetric difference around pairing
// nodes, creating one first when none exists. Moves that the argument makes
// on the target side are emitted as appended inverse switches. Both graphs
// must realize the same instance.
std::vector<SwitchMove> switch_path(const LabeledGraph& g0, const LabeledGraph& g1);

}  // namespace jdm

// Copyright 2026 The graphprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHPREP_LOCMIN_H
#define GRAPHPREP_LOCMIN_H

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "graphprep/bitvec.h"
#include "graphprep/budget.h"
#include "graphprep/graph.h"

namespace graphprep {

/// A pair K subset-of D such that every vertex outside D has an even number of
/// neighbors in K. Construction through make() checks this against the graph.
class EvenlySeenWitness {
   public:
    /// Throws InvalidWitnessError when K is empty, K is not inside D, or some
    /// vertex outside D sees K an odd number of times.
    static EvenlySeenWitness make(const Graph &g, BitVec k_set, BitVec d_set);

    const BitVec &k_set() const {
        return k_set_;
    }
    const BitVec &d_set() const {
        return d_set_;
    }
    size_t d() const {
        return d_set_.popcount();
    }

   private:
    EvenlySeenWitness(BitVec k, BitVec d) : k_set_(std::move(k)), d_set_(std::move(d)) {
    }
    BitVec k_set_;
    BitVec d_set_;
};

/// Every vertex outside D has an even number of neighbors inside D.
bool is_evenly_seen(const Graph &g, const BitVec &d_set);

/// K is locally evenly seen with respect to D: K nonempty, K inside D, and
/// every vertex outside D sees K an even number of times. Throws
/// BadNestingError when K is empty or not contained in D.
bool is_d_locally_evenly_seen(const Graph &g, const BitVec &k_set, const BitVec &d_set);

/// Local complementations bringing the minimum degree down to |D| - 1 or
/// less, at most 2|K| of them. Throws InvalidWitnessError when the witness
/// does not hold for `g`.
LcSequence reduce_degree(const Graph &g, const EvenlySeenWitness &w);

struct DeltaLocResult {
    size_t value;
    EvenlySeenWitness witness;
    LcSequence reduction;
};

enum class SweepKernel {
    Parallel,
    Serial,
};

/// Minimum degree over the local complementation orbit, computed from the
/// best nonempty K over all subsets. Throws TooLargeError above
/// budgets.max_subset_vertices and EmptySetError on the empty graph.
DeltaLocResult delta_loc_exact(const Graph &g, const Budgets &budgets = {},
                               SweepKernel kernel = SweepKernel::Parallel);

/// Breadth-first walk over the labeled orbit, returning the smallest minimum
/// degree seen. Throws BudgetExceededError past `max_orbit_size` graphs.
size_t delta_loc_orbit_oracle(const Graph &g, size_t max_orbit_size = Budgets{}.max_orbit_size);

/// Labeled local complementation orbit with a shortest path to each member.
struct Orbit {
    std::vector<Graph> graphs;
    std::vector<LcSequence> paths;
    std::unordered_map<BitVec, size_t, BitVecHash> index;

    size_t size() const {
        return graphs.size();
    }
    bool contains(const Graph &g) const {
        return index.count(g.encode()) != 0;
    }
    std::optional<LcSequence> path_to(const Graph &g) const;
};

Orbit lc_orbit(const Graph &g, size_t max_orbit_size = Budgets{}.max_orbit_size);

/// Best orbit member under a score, visiting at most `max_visits` graphs in
/// breadth-first order. Ties keep the earlier (shorter path) member.
struct OrbitSearchResult {
    Graph best;
    LcSequence path;
    double score;
    size_t visited;
    bool complete;
};
OrbitSearchResult lc_search_min(const Graph &g, const std::function<double(const Graph &)> &score,
                                size_t max_visits);

struct ChiPrimeLoc {
    size_t value;
    LcSequence sequence;
};

/// Smallest exact chromatic index over the orbit. Throws BudgetExceededError
/// if the orbit is too big or a member has too many edges for exact coloring.
ChiPrimeLoc chi_prime_loc(const Graph &g, const Budgets &budgets = {});

/// delta_loc(g) <= min(floor(n/2), rank(A)).
bool check_corollary2(const Graph &g, const Budgets &budgets = {});

}  // namespace graphprep

#endif

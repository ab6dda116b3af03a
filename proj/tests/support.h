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
#ifndef GRAPHPREP_TESTS_SUPPORT_H
#define GRAPHPREP_TESTS_SUPPORT_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "graphprep/graph.h"
#include "graphprep/pauli.h"

namespace testsupport {

using graphprep::Graph;

/// One representative per isomorphism class on n vertices, n <= 7.
std::vector<Graph> graphs_up_to_iso(size_t n, bool connected_only);

/// Every labeled graph on n vertices, n <= 5.
std::vector<Graph> all_labeled_graphs(size_t n);

/// Connected G(n, 1/2) samples with n in [2, 10]; the acceptance corpus.
std::vector<Graph> seeded_corpus(size_t count, uint64_t seed);

Graph cycle(size_t n);
Graph grid(size_t rows, size_t cols);
Graph complete(size_t n);
Graph star(size_t leaves);
/// The bipartite graph whose outside-by-inside incidence is the 4x3 sigma
/// example; outside vertices 0..3, inside 4..6.
Graph sigma_example();

/// Minimum degree over the labeled LC orbit, by breadth-first search over
/// edge-set codes.
size_t orbit_min_degree(const Graph &g);

/// GF(2) rank of 0/1 rows by enumerating the span.
size_t span_rank(const std::vector<std::vector<int>> &rows);

/// Plain graph6 decoder (n < 63).
Graph decode_graph6(const std::string &s);

/// Dense state vector, qubit q is bit q of the basis index.
class StateVector {
   public:
    explicit StateVector(size_t n);  // |0...0>
    size_t num_qubits() const {
        return n_;
    }
    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void z(size_t q);
    void cz(size_t a, size_t b);
    /// Projects onto the (-1)^outcome eigenspace of p and renormalizes.
    /// Returns the outcome probability.
    double project(const graphprep::PauliString &p, bool outcome);
    /// <psi| p |psi>, real for Hermitian p.
    double expectation(const graphprep::PauliString &p) const;

   private:
    std::vector<std::complex<double>> apply(const graphprep::PauliString &p) const;
    size_t n_;
    std::vector<std::complex<double>> amp_;
};

}  // namespace testsupport

#endif

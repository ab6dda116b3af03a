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
#include "graphprep/planner.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <optional>
#include <set>

#include "graphprep/edge_coloring.h"
#include "graphprep/errors.h"
#include "graphprep/gadget.h"
#include "graphprep/locmin.h"

namespace graphprep {

namespace {

/// Orbit members visited when looking for a cheaper LC-equivalent graph.
constexpr size_t kLcSearchVisits = 20000;
constexpr size_t kListRestarts = 1024;
constexpr size_t kAttachCandidates = 3;
constexpr size_t kListWorkBudget = 50000000;
constexpr uint64_t kListSeed = 0x5eed;

ScheduleOp alloc_op(size_t q) {
    ScheduleOp op;
    op.kind = OpKind::AllocAncillaPlus;
    op.qubits = {q};
    return op;
}

ScheduleOp cz_op(size_t a, size_t b) {
    ScheduleOp op;
    op.kind = OpKind::Unitary;
    op.gate = GateName::CZ;
    op.qubits = {a, b};
    return op;
}

ScheduleOp discard_op(size_t q) {
    ScheduleOp op;
    op.kind = OpKind::Discard;
    op.qubits = {q};
    return op;
}

EdgeColoring color_edges(const Graph &g, const Budgets &budgets) {
    return edge_coloring(g, g.num_edges() <= budgets.max_exact_coloring_edges, budgets.max_exact_coloring_edges);
}

/// Single-qubit basis of a one-qubit measurement, else 0.
char single_basis(const ScheduleOp &op) {
    if (op.kind == OpKind::ComputationalMeasure) {
        return 'Z';
    }
    if (op.kind == OpKind::PauliMeasure && op.qubits.size() == 1) {
        return op.observable.at(0);
    }
    return 0;
}

/// Removes corrections that cannot affect the final state: the qubit is
/// discarded next, or it sits in an eigenstate of one single-qubit
/// measurement and the correction is that same Pauli or the next
/// measurement anticommutes with it.
void drop_dead_corrections(Schedule &s) {
    size_t n = 0;
    for (const ScheduleOp &op : s.ops) {
        for (size_t q : op.qubits) {
            n = std::max(n, q + 1);
        }
    }
    std::vector<std::vector<size_t>> touching(n);
    for (size_t i = 0; i < s.ops.size(); i++) {
        for (size_t q : s.ops[i].qubits) {
            touching[q].push_back(i);
        }
    }
    auto dead_on = [&](size_t i, size_t q) {
        const std::vector<size_t> &t = touching[q];
        size_t k = std::find(t.begin(), t.end(), i) - t.begin();
        std::optional<size_t> prev, next;
        for (size_t j = k; j-- > 0;) {
            if (s.ops[t[j]].kind != OpKind::PauliCorrect) {
                prev = t[j];
                break;
            }
        }
        for (size_t j = k + 1; j < t.size(); j++) {
            if (s.ops[t[j]].kind != OpKind::PauliCorrect) {
                next = t[j];
                break;
            }
        }
        if (!next.has_value()) {
            return false;
        }
        if (s.ops[*next].kind == OpKind::Discard) {
            return true;
        }
        char before = prev.has_value() ? single_basis(s.ops[*prev]) : 0;
        size_t pos = std::find(s.ops[i].qubits.begin(), s.ops[i].qubits.end(), q) - s.ops[i].qubits.begin();
        if (before != 0 && s.ops[i].correction.at(pos) == before) {
            return true;
        }
        char after = single_basis(s.ops[*next]);
        return before != 0 && after != 0 && before != after;
    };
    std::vector<ScheduleOp> ops;
    for (size_t i = 0; i < s.ops.size(); i++) {
        const ScheduleOp &op = s.ops[i];
        bool dead = op.kind == OpKind::PauliCorrect &&
                    std::all_of(op.qubits.begin(), op.qubits.end(), [&](size_t q) { return dead_on(i, q); });
        if (!dead) {
            ops.push_back(op);
        }
    }
    s.ops = std::move(ops);
}

/// Per-qubit ready layers and outcome numbering for measurement plans.
/// Outcome indices follow emission order; finalize_schedule remaps them.
class Builder {
   public:
    Builder(Schedule &s, size_t num_qubits)
        : s_(s), free_(num_qubits, 0), plus_(num_qubits, false), wrong_end_(num_qubits, false), open_(num_qubits) {
    }

    size_t free(size_t q) const {
        return free_[q];
    }
    bool is_plus(size_t q) const {
        return plus_[q];
    }
    size_t next_outcome() const {
        return outcomes_;
    }
    size_t depth() const {
        return free_.empty() ? 0 : *std::max_element(free_.begin(), free_.end());
    }

    /// Emits `op` at `layer` and returns the index of its first outcome.
    size_t emit(ScheduleOp op, size_t layer) {
        size_t first = outcomes_;
        outcomes_ += op.num_outcomes();
        op.layer = layer;
        if (op.is_physical()) {
            for (size_t q : op.qubits) {
                free_[q] = std::max(free_[q], layer + 1);
            }
        }
        s_.ops.push_back(std::move(op));
        return first;
    }

    /// Measures q in X (resp. Z) and corrects it to |+> (resp. |0>).
    void reset(size_t q, bool plus) {
        size_t layer = free_[q];
        size_t o = emit(single_measure(q, plus ? 'X' : 'Z'), layer);
        emit(pauli_correct({q}, plus ? 'Z' : 'X', {o}), layer);
        plus_[q] = plus;
    }
    void reset_plus(size_t q) {
        reset(q, true);
    }

    void restore_plus(size_t q) {
        close(q);
        if (!plus_[q]) {
            mark_wrong_end(q);
            reset_plus(q);
        }
    }

    /// Qubits that ended in the wrong basis and paid for a late reset.
    void mark_wrong_end(size_t q) {
        wrong_end_[q] = true;
    }
    const std::vector<bool> &wrong_end() const {
        return wrong_end_;
    }

    /// Endpoint b of the gadget left open on ancilla c, if any.
    std::optional<size_t> open_endpoint(size_t c) const {
        if (!open_[c].has_value()) {
            return std::nullopt;
        }
        return open_[c]->b;
    }

    /// First two measurements of a gadget on (a, b) through c at t1 < t2.
    void open_gadget(size_t a, size_t b, size_t c, size_t t1, size_t t2) {
        close(c);
        size_t first = outcomes_;
        std::vector<ScheduleOp> ops = cz_gadget_open(a, b, c, first, variant(c));
        emit(std::move(ops[0]), t1);
        emit(std::move(ops[1]), t2);
        emit(std::move(ops[2]), t2);
        open_[c] = Open{b, first, first + 1};
    }

    /// Second CZ on (a2, b) through the gadget open on c, starting at t.
    void pair_gadget(size_t a2, size_t c, size_t t) {
        Open o = *open_[c];
        std::vector<ScheduleOp> ops = cz_gadget_pair(a2, o.b, c, o.m1, o.m2, outcomes_, variant(c));
        emit(std::move(ops[0]), t);
        for (size_t k = 1; k < ops.size(); k++) {
            emit(std::move(ops[k]), t + 1);
        }
        open_[c].reset();
    }

    /// Finishes the gadget open on c with its last ancilla measurement.
    void close(size_t c) {
        if (!open_[c].has_value()) {
            return;
        }
        size_t layer = free_[c];
        std::vector<ScheduleOp> ops = cz_gadget_close(open_[c]->b, c, open_[c]->m1, outcomes_, variant(c));
        for (ScheduleOp &op : ops) {
            emit(std::move(op), layer);
        }
        plus_[c] = !plus_[c];
        open_[c].reset();
    }

    struct Slot {
        size_t t1, t2;
        bool a_first;
        size_t finish() const {
            return t2 + 1;
        }
    };

    Slot probe(size_t a, size_t b, size_t c) const {
        auto one = [&](size_t x, size_t y, bool a_first) {
            size_t t1 = std::max(free_[x], free_[c]);
            size_t t2 = std::max(t1 + 1, free_[y]);
            return Slot{t1, t2, a_first};
        };
        Slot p = one(a, b, true);
        Slot q = one(b, a, false);
        if (q.finish() < p.finish() || (q.finish() == p.finish() && q.t1 < p.t1)) {
            return q;
        }
        return p;
    }

    /// CZ(a, b) through ancilla c at the given measurement layers.
    void gadget(size_t a, size_t b, size_t c, const Slot &slot) {
        size_t x = slot.a_first ? a : b;
        size_t y = slot.a_first ? b : a;
        GadgetVariant variant = plus_[c] ? GadgetVariant::AncillaPlus : GadgetVariant::AncillaZero;
        std::vector<ScheduleOp> ops = cz_measurement_gadget(x, y, c, outcomes_, variant);
        size_t t3 = slot.t2 + 1;
        std::array<size_t, 6> layers{slot.t1, slot.t2, t3, t3, t3, t3};
        for (size_t k = 0; k < ops.size(); k++) {
            emit(std::move(ops[k]), layers[k]);
        }
        plus_[c] = !plus_[c];
    }

    void discard(size_t q) {
        close(q);
        emit(discard_op(q), free_[q] == 0 ? 0 : free_[q] - 1);
    }

   private:
    struct Open {
        size_t b, m1, m2;
    };

    GadgetVariant variant(size_t c) const {
        return plus_[c] ? GadgetVariant::AncillaPlus : GadgetVariant::AncillaZero;
    }

    Schedule &s_;
    std::vector<size_t> free_;
    std::vector<bool> plus_;
    std::vector<bool> wrong_end_;
    std::vector<std::optional<Open>> open_;
    size_t outcomes_ = 0;
};

/// Builds every edge of g not incident to `skip`. `blocks` lists the other
/// vertices in activation order: an edge is built in the phase of its later
/// endpoint, and vertices of later blocks lend themselves as gadget ancillas
/// until their own phase starts.
void build_edges_by_gadgets(Builder &b, const Graph &g, const std::vector<std::vector<Vertex>> &blocks,
                            const std::vector<size_t> &permanent, std::optional<Vertex> skip) {
    size_t n = g.num_vertices();
    std::vector<size_t> block_of(n, blocks.size());
    for (size_t j = 0; j < blocks.size(); j++) {
        for (Vertex v : blocks[j]) {
            block_of[v] = j;
        }
    }
    for (size_t j = 0; j < blocks.size(); j++) {
        for (Vertex v : blocks[j]) {
            b.restore_plus(v);
        }
        Graph phase(n);
        for (auto [u, w] : g.edges()) {
            if (skip.has_value() && (u == *skip || w == *skip)) {
                continue;
            }
            if (std::max(block_of[u], block_of[w]) == j) {
                phase.add_edge(u, w);
            }
        }
        if (phase.num_edges() == 0) {
            continue;
        }
        std::vector<size_t> pool = permanent;
        for (size_t k = j + 1; k < blocks.size(); k++) {
            pool.insert(pool.end(), blocks[k].begin(), blocks[k].end());
        }
        for (const auto &cls : edge_coloring(phase, false).classes()) {
            for (auto [u, w] : cls) {
                std::optional<std::pair<size_t, Builder::Slot>> best;
                for (size_t c : pool) {
                    Builder::Slot s = b.probe(u, w, c);
                    if (!best.has_value() || s.finish() < best->second.finish() ||
                        (s.finish() == best->second.finish() && s.t1 < best->second.t1)) {
                        best = std::make_pair(c, s);
                    }
                }
                b.gadget(u, w, best->first, best->second);
            }
        }
    }
}

/// Builds every edge of g by repeatedly committing the cheapest move. A move
/// opens a gadget on a free ancilla, or pairs an edge with the gadget left
/// open on an ancilla when they share its endpoint. The cost is the layer the
/// ancilla frees up, plus `activation_cost` per endpoint not yet touched and
/// a per-vertex jitter. Untouched vertices serve as ancillas alongside
/// `permanent`.
void build_edges_by_list(Builder &b, const Graph &g, const std::vector<size_t> &permanent, std::optional<Vertex> skip,
                         double activation_cost, const std::vector<double> &jitter) {
    size_t n = g.num_vertices();
    std::vector<Edge> rest;
    for (const Edge &e : g.edges()) {
        if (!skip.has_value() || (e.first != *skip && e.second != *skip)) {
            rest.push_back(e);
        }
    }
    std::vector<bool> touched(n, false);
    if (skip.has_value()) {
        touched[*skip] = true;
    }
    std::vector<size_t> left(n);
    for (Vertex v = 0; v < n; v++) {
        left[v] = g.degree(v);
    }
    auto ready = [&](Vertex v) {
        if (touched[v]) {
            return b.free(v);
        }
        bool open = b.open_endpoint(v).has_value();
        bool plus = b.is_plus(v) != open;
        return b.free(v) + (open ? 1 : 0) + (plus ? 0 : 1);
    };
    struct Move {
        double score;
        size_t edge, c, x, y, t1, t2;
        bool pair;
    };
    while (!rest.empty()) {
        std::optional<Move> best;
        auto offer = [&](const Move &mv) {
            if (!best.has_value() || mv.score < best->score) {
                best = mv;
            }
        };
        for (size_t i = 0; i < rest.size(); i++) {
            auto [u, w] = rest[i];
            double base = activation_cost * ((touched[u] ? 0 : 1) + (touched[w] ? 0 : 1)) + jitter[u] + jitter[w];
            auto consider = [&](size_t c) {
                double bias = c < n ? 0.001 * static_cast<double>(left[c]) : 0.0;
                std::optional<size_t> open = b.open_endpoint(c);
                if (open.has_value() && (*open == u || *open == w)) {
                    size_t x = *open == u ? w : u;
                    size_t t = std::max(b.free(c), ready(x));
                    offer({base + bias + static_cast<double>(t + 2), i, c, x, *open, t, t + 1, true});
                }
                size_t start = b.free(c) + (open.has_value() ? 1 : 0);
                for (bool flip : {false, true}) {
                    size_t x = flip ? w : u;
                    size_t y = flip ? u : w;
                    size_t t1 = std::max(start, ready(x));
                    size_t t2 = std::max(t1 + 1, ready(y));
                    // An open gadget still owes one layer unless it is paired later.
                    double pending = left[y] > 1 ? 0.5 : 1.0;
                    offer({base + bias + static_cast<double>(t2 + 1) + pending - 0.01 * static_cast<double>(left[y]), i,
                           c, x, y, t1, t2, false});
                }
            };
            for (size_t c : permanent) {
                consider(c);
            }
            for (Vertex c = 0; c < n; c++) {
                if (c != u && c != w && !touched[c]) {
                    consider(c);
                }
            }
        }
        const Move &mv = *best;
        for (Vertex v : {mv.x, mv.y}) {
            if (!touched[v]) {
                b.restore_plus(v);
                touched[v] = true;
            }
        }
        if (mv.pair) {
            b.pair_gadget(mv.x, mv.c, std::max(mv.t1, b.free(mv.x)));
        } else {
            b.close(mv.c);
            size_t t1 = std::max({mv.t1, b.free(mv.x), b.free(mv.c)});
            size_t t2 = std::max(t1 + 1, b.free(mv.y));
            b.open_gadget(mv.x, mv.y, mv.c, t1, t2);
        }
        left[mv.x]--;
        left[mv.y]--;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(mv.edge));
    }
    for (size_t c : permanent) {
        b.close(c);
    }
    for (Vertex v = 0; v < n; v++) {
        if (v != skip) {
            b.restore_plus(v);
        }
    }
}

/// Basis each qubit starts in (true for |0>) and, after a build, the qubits
/// that ended in the wrong basis.
struct StartBasis {
    std::vector<bool> zero;
    std::vector<bool> wrong_end;
};

using ListMaker = std::function<Schedule(double, const std::vector<double> &, StartBasis &)>;

/// Runs `make(activation_cost, jitter, basis)` over a seeded grid of restarts
/// sized to the graph and returns the schedule with the smallest depth. Each
/// restart is rerun with the late-reset qubits started in the other basis.
Schedule best_list_schedule(size_t n, size_t m, const ListMaker &make) {
    size_t restarts = std::clamp<size_t>(kListWorkBudget / std::max<size_t>(1, 6 * m * m * (n + 1)), 1, kListRestarts);
    std::mt19937_64 rng(kListSeed);
    std::uniform_real_distribution<double> noise(0.0, 1.0);
    std::vector<std::vector<double>> jitters(restarts, std::vector<double>(n, 0.0));
    for (size_t r = 1; r < restarts; r++) {
        double scale = 0.5 + static_cast<double>(r % 4);
        for (double &x : jitters[r]) {
            x = scale * noise(rng);
        }
    }
    constexpr std::array<double, 6> kCosts{0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
    auto key = [](const Schedule &t) {
        return std::pair<size_t, size_t>{t.claims.l_depth, t.ops.size()};
    };
    auto run = [&](size_t k) {
        double c = kCosts[k % kCosts.size()];
        const std::vector<double> &jitter = jitters[k / kCosts.size()];
        StartBasis basis;
        Schedule first = make(c, jitter, basis);
        std::vector<bool> flipped = basis.wrong_end;
        if (std::find(flipped.begin(), flipped.end(), true) == flipped.end()) {
            return first;
        }
        StartBasis again{flipped, {}};
        Schedule second = make(c, jitter, again);
        return key(second) < key(first) ? second : first;
    };
    std::vector<std::pair<size_t, size_t>> cost(restarts * kCosts.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t k = 0; k < cost.size(); k++) {
        cost[k] = key(run(k));
    }
    return run(std::min_element(cost.begin(), cost.end()) - cost.begin());
}

/// Vertex orders and block splits tried by the gadget planners.
std::vector<std::vector<std::vector<Vertex>>> candidate_blocks(const Graph &g, std::optional<Vertex> skip) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (v != skip) {
            verts.push_back(v);
        }
    }
    std::vector<std::vector<Vertex>> orders;
    auto by_degree = verts;
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) > g.degree(b);
    });
    orders.push_back(by_degree);
    std::reverse(by_degree.begin(), by_degree.end());
    orders.push_back(by_degree);

    std::vector<std::vector<std::vector<Vertex>>> out;
    for (const auto &order : orders) {
        size_t n = order.size();
        out.push_back({order});
        // Two blocks: the last k vertices serve as ancillas for the rest.
        size_t k = std::max<size_t>(1, static_cast<size_t>(std::lround(std::sqrt(static_cast<double>(n)))));
        if (k < n) {
            out.push_back({std::vector<Vertex>(order.begin(), order.end() - static_cast<std::ptrdiff_t>(k)),
                           std::vector<Vertex>(order.end() - static_cast<std::ptrdiff_t>(k), order.end())});
        }
        for (double keep : {0.25, 0.34, 0.5, 0.67}) {
            std::vector<std::vector<Vertex>> blocks;
            size_t pos = 0;
            while (pos < n) {
                size_t rest = n - pos;
                size_t take = rest <= 1 ? rest : std::max<size_t>(1, static_cast<size_t>(std::ceil(keep * rest)));
                take = std::min(take, rest);
                blocks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(pos),
                                    order.begin() + static_cast<std::ptrdiff_t>(pos + take));
                pos += take;
            }
            out.push_back(std::move(blocks));
        }
    }
    return out;
}

/// Picks the schedule with the smallest depth, then the fewest ops.
Schedule best_of(std::vector<Schedule> options) {
    size_t best = 0;
    for (size_t i = 1; i < options.size(); i++) {
        const auto &a = options[i].claims;
        const auto &b = options[best].claims;
        if (a.l_depth < b.l_depth || (a.l_depth == b.l_depth && options[i].ops.size() < options[best].ops.size())) {
            best = i;
        }
    }
    return std::move(options[best]);
}

/// X measurements on every helper of `rec` in one layer, then Z corrections
/// derived by tracking how earlier corrections flip later helper outcomes.
void emit_contraction(Builder &b, const ExpansionRecord &rec, size_t layer) {
    std::map<size_t, size_t> outcome;
    for (const auto &step : rec.added) {
        outcome[step.u] = b.emit(single_measure(step.u, 'X'), layer);
        outcome[step.w] = b.emit(single_measure(step.w, 'X'), layer);
    }
    std::map<size_t, std::set<size_t>> frame;
    auto toggle = [](std::set<size_t> &dst, const std::set<size_t> &src) {
        for (size_t x : src) {
            if (!dst.erase(x)) {
                dst.insert(x);
            }
        }
    };
    for (auto it = rec.added.rbegin(); it != rec.added.rend(); ++it) {
        std::set<size_t> eff_u = frame[it->u];
        std::set<size_t> eff_w = frame[it->w];
        toggle(eff_u, {outcome[it->u]});
        toggle(eff_w, {outcome[it->w]});
        toggle(frame[it->v], eff_w);
        for (size_t r : it->moved.ones()) {
            toggle(frame[r], eff_u);
        }
    }
    size_t n = rec.original.num_vertices();
    for (const auto &[q, cond] : frame) {
        if (q < n && !cond.empty()) {
            b.emit(pauli_correct({q}, 'Z', std::vector<size_t>(cond.begin(), cond.end())), layer);
        }
    }
    for (auto it = rec.added.rbegin(); it != rec.added.rend(); ++it) {
        b.emit(discard_op(it->w), layer);
        b.emit(discard_op(it->u), layer);
    }
}

/// Proper coloring of the vertex-edge incidences of g with max(Delta, 2)
/// colors. The incidence graph is bipartite, so Delta colors suffice.
/// Returns slot[i] = {color at first endpoint, color at second endpoint} for
/// edge i of g.edges().
std::vector<std::array<size_t, 2>> incidence_coloring(const Graph &g) {
    auto edges = g.edges();
    size_t n = g.num_vertices();
    size_t colors = std::max<size_t>(2, g.max_degree());
    size_t nodes = n + edges.size();
    constexpr size_t kNone = static_cast<size_t>(-1);
    std::vector<std::vector<size_t>> mate(nodes, std::vector<size_t>(colors, kNone));
    auto free_color = [&](size_t node) {
        for (size_t c = 0; c < colors; c++) {
            if (mate[node][c] == kNone) {
                return c;
            }
        }
        throw std::logic_error("incidence coloring ran out of colors");
    };
    for (size_t i = 0; i < edges.size(); i++) {
        size_t e = n + i;
        for (size_t x : {edges[i].first, edges[i].second}) {
            size_t alpha = free_color(x);
            size_t beta = free_color(e);
            if (mate[e][alpha] != kNone) {
                // Swap alpha and beta along the alternating path leaving e.
                std::vector<std::array<size_t, 3>> path;
                size_t cur = e;
                size_t col = alpha;
                while (mate[cur][col] != kNone) {
                    size_t nxt = mate[cur][col];
                    path.push_back({cur, nxt, col});
                    cur = nxt;
                    col = col == alpha ? beta : alpha;
                }
                for (auto [p, q, c] : path) {
                    mate[p][c] = kNone;
                    mate[q][c] = kNone;
                }
                for (auto [p, q, c] : path) {
                    size_t swapped = c == alpha ? beta : alpha;
                    mate[p][swapped] = q;
                    mate[q][swapped] = p;
                }
            }
            mate[x][alpha] = e;
            mate[e][alpha] = x;
        }
    }
    std::vector<std::array<size_t, 2>> slots(edges.size());
    for (size_t i = 0; i < edges.size(); i++) {
        for (size_t c = 0; c < colors; c++) {
            if (mate[n + i][c] == edges[i].first) {
                slots[i][0] = c;
            } else if (mate[n + i][c] == edges[i].second) {
                slots[i][1] = c;
            }
        }
    }
    return slots;
}

Schedule init_schedule(const Graph &g) {
    if (g.num_vertices() == 0) {
        throw EmptySetError("cannot plan for a graph with no vertices");
    }
    Schedule s;
    s.target = g;
    return s;
}

Schedule edge_by_edge_measurement_for(const Graph &target, const LcSequence &prefix, const Graph &prepared,
                                      const std::function<void(Builder &, size_t)> &build,
                                      StartBasis *basis = nullptr) {
    Schedule s = init_schedule(target);
    s.lc_prefix = prefix;
    size_t n = prepared.num_vertices();
    bool need_ancilla = prepared.num_edges() > 0;
    s.initial_qubits = n + (need_ancilla ? 1 : 0);
    Builder b(s, s.initial_qubits);
    for (size_t q = 0; q < s.initial_qubits; q++) {
        b.reset(q, basis == nullptr || basis->zero.empty() || !basis->zero[q]);
    }
    if (need_ancilla) {
        build(b, n);
        b.discard(n);
    }
    if (basis != nullptr) {
        basis->wrong_end = b.wrong_end();
    }
    drop_dead_corrections(s);
    finalize_schedule(s);
    return s;
}

std::string bound_note(const char *name, size_t m, size_t n, size_t slack) {
    return std::string(name) + ": depth bound ceil(" + std::to_string(m) + "/sqrt(" + std::to_string(n) + ")) + " +
           std::to_string(slack) + " = " + std::to_string(sqrt_depth_bound(m, n, slack));
}

}  // namespace

size_t sqrt_depth_bound(size_t m, size_t n, size_t slack) {
    if (n == 0) {
        return slack;
    }
    double r = static_cast<double>(m) / std::sqrt(static_cast<double>(n));
    return static_cast<size_t>(std::ceil(r - 1e-12)) + slack;
}

Schedule plan_edge_by_edge_unitary(const Graph &g, bool lc_optimize, const Budgets &budgets) {
    Schedule s = init_schedule(g);
    Graph prepared = g;
    if (lc_optimize) {
        try {
            s.lc_prefix = chi_prime_loc(g, budgets).sequence;
        } catch (const BudgetExceededError &) {
            auto colors = [&](const Graph &h) {
                return static_cast<double>(edge_coloring(h, false).num_colors);
            };
            s.lc_prefix = lc_search_min(g, colors, budgets.max_orbit_size).path;
            s.notes.push_back("lc prefix minimizes greedy colors; exact orbit coloring exceeded budget");
        }
        prepared = s.prepared_graph();
    }
    for (size_t q = 0; q < g.num_vertices(); q++) {
        ScheduleOp op = alloc_op(q);
        op.layer = 0;
        s.ops.push_back(op);
    }
    auto classes = color_edges(prepared, budgets).classes();
    for (size_t c = 0; c < classes.size(); c++) {
        for (auto [u, v] : classes[c]) {
            ScheduleOp op = cz_op(u, v);
            op.layer = c + 1;
            s.ops.push_back(op);
        }
    }
    drop_dead_corrections(s);
    finalize_schedule(s);
    return s;
}

Schedule plan_edge_by_edge_measurement(const Graph &g, bool lc_optimize, const Budgets &budgets) {
    Graph prepared = g;
    LcSequence prefix;
    if (lc_optimize) {
        auto found = lc_search_min(
            g,
            [](const Graph &h) {
                return static_cast<double>(h.num_edges());
            },
            std::min(budgets.max_orbit_size, kLcSearchVisits));
        prepared = found.best;
        prefix = found.path;
    }
    std::vector<Schedule> options;
    for (const auto &blocks : candidate_blocks(prepared, std::nullopt)) {
        options.push_back(edge_by_edge_measurement_for(g, prefix, prepared, [&](Builder &b, size_t anc) {
            build_edges_by_gadgets(b, prepared, blocks, {anc}, std::nullopt);
        }));
    }
    options.push_back(best_list_schedule(
        prepared.num_vertices(), prepared.num_edges(),
        [&](double cost, const std::vector<double> &jitter, StartBasis &basis) {
            return edge_by_edge_measurement_for(
                g, prefix, prepared,
                [&](Builder &b, size_t anc) {
                    build_edges_by_list(b, prepared, {anc}, std::nullopt, cost, jitter);
                },
                &basis);
        }));
    Schedule s = best_of(std::move(options));
    s.notes.push_back(bound_note("edge-by-edge measurement", g.num_edges(), g.num_vertices(),
                                 kEdgeByEdgeDepthSlack));
    return s;
}

namespace {

/// Degree-1 vertices of g paired with their neighbor, at most one per edge.
/// Such a vertex can join by one X_leaf Z_v measurement instead of a gadget.
std::vector<Edge> leaf_attachments(const Graph &g) {
    std::vector<Edge> out;
    for (Vertex v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) != 1) {
            continue;
        }
        Vertex u = g.neighbors(v).ones().front();
        if (g.degree(u) == 1 && u < v) {
            continue;
        }
        out.emplace_back(v, u);
    }
    return out;
}

}  // namespace

Schedule plan_constant_depth(const Graph &g, bool allow_unitaries, bool lc_optimize, const Budgets &budgets) {
    Schedule s = init_schedule(g);
    Graph prepared = g;
    if (lc_optimize) {
        auto found = lc_search_min(
            g,
            [allow_unitaries](const Graph &h) {
                ExpansionRecord r = expand_to_max_degree_3(h);
                size_t helpers = r.num_added_vertices();
                // Measurement-only adds one gadget ancilla per expanded edge
                // not attached through a leaf.
                size_t gadgets = r.expanded.num_edges() - leaf_attachments(r.expanded).size();
                return static_cast<double>(allow_unitaries ? helpers : helpers + gadgets);
            },
            std::min(budgets.max_orbit_size, kLcSearchVisits));
        prepared = found.best;
        s.lc_prefix = found.path;
    }
    ExpansionRecord rec = expand_to_max_degree_3(prepared);
    const Graph &ex = rec.expanded;
    size_t nx = ex.num_vertices();

    if (allow_unitaries) {
        Builder b(s, nx);
        for (size_t q = 0; q < nx; q++) {
            b.emit(alloc_op(q), 0);
        }
        auto classes = edge_coloring(ex, false).classes();
        for (size_t c = 0; c < classes.size(); c++) {
            for (auto [u, v] : classes[c]) {
                b.emit(cz_op(u, v), c + 1);
            }
        }
        if (!rec.added.empty()) {
            emit_contraction(b, rec, classes.size() + 1);
        }
    } else {
        std::vector<Edge> leaves = leaf_attachments(ex);
        Graph core = ex;
        std::vector<bool> is_leaf(nx, false);
        for (auto [leaf, v] : leaves) {
            core.toggle_edge(leaf, v);
            is_leaf[leaf] = true;
        }
        auto edges = core.edges();
        s.initial_qubits = nx + edges.size();
        Builder b(s, s.initial_qubits);
        for (size_t q = 0; q < s.initial_qubits; q++) {
            if (q < nx && is_leaf[q]) {
                size_t o = b.emit(single_measure(q, 'Z'), 0);
                b.emit(pauli_correct({q}, 'X', {o}), 0);
            } else {
                b.reset_plus(q);
            }
        }
        auto slots = incidence_coloring(core);
        for (size_t i = 0; i < edges.size(); i++) {
            auto [a, c] = edges[i];
            bool a_first = slots[i][0] < slots[i][1];
            Builder::Slot slot{1 + std::min(slots[i][0], slots[i][1]), 1 + std::max(slots[i][0], slots[i][1]),
                               a_first};
            b.gadget(a, c, nx + i, slot);
        }
        for (size_t i = 0; i < edges.size(); i++) {
            b.discard(nx + i);
        }
        for (auto [leaf, v] : leaves) {
            size_t layer = std::max(b.free(leaf), b.free(v));
            for (ScheduleOp &op : vertex_attach_ops(leaf, {v}, b.next_outcome(), true)) {
                b.emit(std::move(op), layer);
            }
        }
        if (!rec.added.empty()) {
            size_t layer = 0;
            for (const auto &step : rec.added) {
                layer = std::max({layer, b.free(step.u), b.free(step.w)});
            }
            emit_contraction(b, rec, layer);
        }
    }
    drop_dead_corrections(s);
    finalize_schedule(s);
    s.notes.push_back("constant depth: " + std::to_string(rec.num_added_vertices()) + " expansion helpers, layer cap " +
                      std::to_string(kConstantDepthLayers));
    return s;
}

Schedule plan_global_operator(const Graph &g, bool allow_unitaries) {
    Schedule s = init_schedule(g);
    size_t n = g.num_vertices();
    std::vector<size_t> all(n);
    for (size_t q = 0; q < n; q++) {
        all[q] = q;
    }
    if (allow_unitaries) {
        for (size_t q = 0; q < n; q++) {
            ScheduleOp op = alloc_op(q);
            op.layer = 0;
            s.ops.push_back(op);
        }
        if (g.num_edges() > 0) {
            ScheduleOp op;
            op.kind = OpKind::Unitary;
            op.gate = GateName::GlobalPrep;
            op.qubits = all;
            op.graph = g;
            op.layer = 1;
            s.ops.push_back(op);
        }
    } else {
        s.initial_qubits = n;
        ScheduleOp op;
        op.kind = OpKind::GlobalProjMeasure;
        op.qubits = all;
        op.graph = g;
        s.ops.push_back(op);
        for (size_t v = 0; v < n; v++) {
            s.ops.push_back(pauli_correct({v}, 'Z', {v}));
        }
    }
    drop_dead_corrections(s);
    finalize_schedule(s);
    return s;
}

Schedule plan_no_ancilla_measurement(const Graph &g, bool lc_optimize, const Budgets &budgets) {
    Schedule base = init_schedule(g);
    DeltaLocResult dl = delta_loc_exact(g, budgets);
    LcSequence prefix = dl.reduction;
    Graph prepared = apply_lc_sequence(g, prefix);
    if (lc_optimize) {
        const size_t target_degree = dl.value;
        auto found = lc_search_min(
            prepared,
            [&](const Graph &h) {
                return (h.min_degree() == target_degree ? 0.0 : 1e9) + static_cast<double>(h.num_edges());
            },
            std::min(budgets.max_orbit_size, kLcSearchVisits));
        prepared = found.best;
        prefix.steps.insert(prefix.steps.end(), found.path.steps.begin(), found.path.steps.end());
    }
    size_t n = g.num_vertices();
    std::vector<Vertex> attach;
    for (Vertex u = 0; u < n && attach.size() < kAttachCandidates; u++) {
        if (prepared.degree(u) == dl.value) {
            attach.push_back(u);
        }
    }
    if (attach.empty()) {
        attach.push_back(prepared.min_degree_vertex());
    }

    auto finish = [&](Vertex v, const std::function<void(Builder &)> &build, StartBasis *basis = nullptr) {
        const std::vector<size_t> nbrs = prepared.neighbors(v).ones();
        Schedule s = base;
        s.lc_prefix = prefix;
        s.initial_qubits = n;
        Builder b(s, n);
        for (size_t q = 0; q < n; q++) {
            b.reset(q, basis == nullptr || basis->zero.empty() || !basis->zero[q]);
        }
        build(b);
        for (Vertex q = 0; q < n; q++) {
            if (q != v) {
                b.restore_plus(q);
            }
        }
        b.close(v);
        bool v_zero = !b.is_plus(v);
        if (!v_zero) {
            b.mark_wrong_end(v);
        }
        if (basis != nullptr) {
            basis->wrong_end = b.wrong_end();
        }
        size_t z_layer = b.free(v);
        size_t x_layer = v_zero ? z_layer : z_layer + 1;
        for (size_t q : nbrs) {
            x_layer = std::max(x_layer, b.free(q));
        }
        for (ScheduleOp &op : vertex_attach_ops(v, nbrs, b.next_outcome(), v_zero)) {
            bool z_measure = op.kind == OpKind::ComputationalMeasure;
            b.emit(std::move(op), z_measure ? z_layer : x_layer);
        }
        drop_dead_corrections(s);
        finalize_schedule(s);
        s.notes.push_back("attached vertex " + std::to_string(v));
        return s;
    };
    std::vector<Schedule> options;
    for (Vertex v : attach) {
        for (const auto &blocks : candidate_blocks(prepared, v)) {
            options.push_back(finish(v, [&](Builder &b) {
                build_edges_by_gadgets(b, prepared, blocks, {v}, v);
            }));
        }
        options.push_back(
            best_list_schedule(n, prepared.num_edges(),
                               [&](double cost, const std::vector<double> &jitter, StartBasis &basis) {
                                   return finish(
                                       v,
                                       [&](Builder &b) {
                                           build_edges_by_list(b, prepared, {v}, v, cost, jitter);
                                       },
                                       &basis);
                               }));
    }
    Schedule s = best_of(std::move(options));
    s.notes.push_back("delta_loc = " + std::to_string(dl.value));
    s.notes.push_back(
        bound_note("ancilla-free measurement", prepared.num_edges(), prepared.num_vertices(), kNoAncillaDepthSlack));
    return s;
}

Schedule plan(const Graph &g, const PlanRequest &req) {
    switch (req.measure) {
        case Measure::SNL:
            return req.allow_unitaries ? plan_edge_by_edge_unitary(g, req.lc_optimize, req.budgets)
                                       : plan_edge_by_edge_measurement(g, req.lc_optimize, req.budgets);
        case Measure::SLN:
        case Measure::LSN:
            return plan_constant_depth(g, req.allow_unitaries, req.lc_optimize, req.budgets);
        case Measure::LNS:
        case Measure::NLS:
            return plan_global_operator(g, req.allow_unitaries);
        case Measure::NSL:
            return req.allow_unitaries ? plan_edge_by_edge_unitary(g, req.lc_optimize, req.budgets)
                                       : plan_no_ancilla_measurement(g, req.lc_optimize, req.budgets);
    }
    throw std::logic_error("unhandled measure");
}

}  // namespace graphprep

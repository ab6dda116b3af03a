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
#include "graphprep/schedule.h"

#include <algorithm>
#include <map>
#include <set>

#include "graphprep/errors.h"

namespace graphprep {

namespace {

constexpr std::string_view kOpKindNames[] = {
    "AllocAncillaPlus", "Unitary", "PauliMeasure", "ComputationalMeasure", "GlobalProjMeasure", "Discard", "PauliCorrect",
};
constexpr std::string_view kGateNames[] = {"CZ", "H", "S", "X", "Z", "GlobalPrep"};
constexpr std::string_view kMeasureNames[] = {"nsl", "nls", "snl", "sln", "lns", "lsn"};

}  // namespace

std::string_view op_kind_name(OpKind k) {
    return kOpKindNames[static_cast<size_t>(k)];
}

OpKind parse_op_kind(std::string_view name) {
    for (size_t i = 0; i < std::size(kOpKindNames); i++) {
        if (kOpKindNames[i] == name) {
            return static_cast<OpKind>(i);
        }
    }
    throw ParseError(0, "unknown op kind '" + std::string(name) + "'");
}

std::string_view gate_name(GateName g) {
    return kGateNames[static_cast<size_t>(g)];
}

GateName parse_gate_name(std::string_view name) {
    for (size_t i = 0; i < std::size(kGateNames); i++) {
        if (kGateNames[i] == name) {
            return static_cast<GateName>(i);
        }
    }
    throw ParseError(0, "unknown gate '" + std::string(name) + "'");
}

Measure parse_measure(std::string_view name) {
    std::string lower(name);
    for (auto &c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (size_t i = 0; i < std::size(kMeasureNames); i++) {
        if (kMeasureNames[i] == lower) {
            return static_cast<Measure>(i);
        }
    }
    throw ParseError(0, "unknown measure '" + std::string(name) + "', expected one of snl sln lsn lns nsl nls");
}

std::string_view measure_name(Measure m) {
    return kMeasureNames[static_cast<size_t>(m)];
}

size_t ScheduleOp::num_outcomes() const {
    switch (kind) {
        case OpKind::PauliMeasure:
        case OpKind::ComputationalMeasure:
            return 1;
        case OpKind::GlobalProjMeasure:
            return qubits.size();
        default:
            return 0;
    }
}

Graph Schedule::prepared_graph() const {
    return apply_lc_sequence(target, lc_prefix);
}

size_t Schedule::num_outcomes() const {
    size_t total = 0;
    for (const auto &op : ops) {
        total += op.num_outcomes();
    }
    return total;
}

ComplexityMetrics metrics(const Schedule &s) {
    ComplexityMetrics m;
    size_t live = s.initial_qubits;
    size_t peak = live;
    std::set<size_t> layers;
    std::set<size_t> content_layers;
    for (const auto &op : s.ops) {
        if (op.kind == OpKind::AllocAncillaPlus) {
            live += op.qubits.size();
            peak = std::max(peak, live);
        } else if (op.kind == OpKind::Discard) {
            live -= std::min(live, op.qubits.size());
        }
        if (!op.is_physical()) {
            continue;
        }
        m.s_max = std::max(m.s_max, op.qubits.size());
        layers.insert(op.layer);
        if (op.kind != OpKind::AllocAncillaPlus) {
            content_layers.insert(op.layer);
        }
    }
    size_t n = s.target.num_vertices();
    m.n_ancilla = peak > n ? peak - n : 0;
    m.l_depth = layers.size();
    m.l_content = content_layers.size();
    return m;
}

std::strong_ordering compare_lex(const ComplexityMetrics &a, const ComplexityMetrics &b, Measure m) {
    auto key = [](const ComplexityMetrics &x, char c) {
        return c == 'n' ? x.n_ancilla : c == 's' ? x.s_max : x.l_depth;
    };
    for (char c : measure_name(m)) {
        if (auto o = key(a, c) <=> key(b, c); o != 0) {
            return o;
        }
    }
    return std::strong_ordering::equal;
}

bool verify_layer_disjointness(const Schedule &s) {
    std::map<size_t, std::set<size_t>> used;
    for (const auto &op : s.ops) {
        if (!op.is_physical()) {
            continue;
        }
        auto &layer = used[op.layer];
        for (size_t q : op.qubits) {
            if (!layer.insert(q).second) {
                return false;
            }
        }
    }
    return true;
}

void finalize_schedule(Schedule &s) {
    // Outcome references are in emission order until the ops are sorted.
    std::vector<size_t> emitted_base(s.ops.size());
    size_t count = 0;
    for (size_t i = 0; i < s.ops.size(); i++) {
        emitted_base[i] = count;
        count += s.ops[i].num_outcomes();
    }
    std::vector<size_t> order(s.ops.size());
    for (size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return s.ops[a].layer < s.ops[b].layer;
    });
    std::vector<size_t> remap(count);
    std::vector<ScheduleOp> sorted;
    sorted.reserve(s.ops.size());
    size_t sorted_count = 0;
    for (size_t i : order) {
        for (size_t k = 0; k < s.ops[i].num_outcomes(); k++) {
            remap[emitted_base[i] + k] = sorted_count + k;
        }
        sorted_count += s.ops[i].num_outcomes();
        sorted.push_back(std::move(s.ops[i]));
    }
    for (auto &op : sorted) {
        for (auto &c : op.cond) {
            if (c < remap.size()) {
                c = remap[c];
            }
        }
    }
    s.ops = std::move(sorted);
    std::map<size_t, size_t> renumber;
    for (const auto &op : s.ops) {
        renumber.emplace(op.layer, renumber.size());
    }
    for (auto &op : s.ops) {
        op.layer = renumber[op.layer];
    }
    s.claims = metrics(s);
}

}  // namespace graphprep

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
#include "graphprep/schedule_json.h"

#include "graphprep/errors.h"
#include "graphprep/graph_io.h"

namespace graphprep {

namespace {

std::string local_pauli(const PauliString &p) {
    std::string s = p.str();
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return s;
}

template <class T>
T field(const Json &j, const char *key) {
    if (!j.contains(key)) {
        throw ParseError(0, std::string("schedule JSON is missing '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("bad value for '") + key + "': " + e.what());
    }
}

}  // namespace

Json metrics_to_json(const ComplexityMetrics &m) {
    return Json{{"n", m.n_ancilla}, {"s", m.s_max}, {"l", m.l_depth}, {"l_content", m.l_content}};
}

Json schedule_to_json(const Schedule &s) {
    Json j;
    j["target"] = to_graph6(s.target);
    j["initial_qubits"] = s.initial_qubits;
    j["lc_prefix"] = s.lc_prefix.steps;
    Json ops = Json::array();
    for (const auto &op : s.ops) {
        Json o;
        o["layer"] = op.layer;
        o["kind"] = op_kind_name(op.kind);
        o["qubits"] = op.qubits;
        if (op.kind == OpKind::Unitary) {
            o["gate"] = gate_name(op.gate);
        }
        if (op.kind == OpKind::PauliMeasure) {
            o["observable"] = op.observable.str();
        }
        if (op.kind == OpKind::GlobalProjMeasure || (op.kind == OpKind::Unitary && op.gate == GateName::GlobalPrep)) {
            o["graph"] = to_graph6(op.graph);
        }
        if (op.kind == OpKind::PauliCorrect) {
            o["cond"] = op.cond;
            o["correction"] = local_pauli(op.correction);
        }
        ops.push_back(std::move(o));
    }
    j["ops"] = std::move(ops);
    j["metrics"] = metrics_to_json(s.claims);
    if (!s.notes.empty()) {
        j["notes"] = s.notes;
    }
    return j;
}

Schedule schedule_from_json(const Json &j) {
    if (!j.is_object()) {
        throw ParseError(0, "schedule JSON must be an object");
    }
    Schedule s;
    s.target = from_graph6(field<std::string>(j, "target"));
    s.initial_qubits = j.contains("initial_qubits") ? field<size_t>(j, "initial_qubits") : 0;
    s.lc_prefix.steps = field<std::vector<size_t>>(j, "lc_prefix");
    const Json &ops = j.at("ops");
    if (!ops.is_array()) {
        throw ParseError(0, "'ops' must be an array");
    }
    for (const auto &o : ops) {
        ScheduleOp op;
        op.layer = field<size_t>(o, "layer");
        op.kind = parse_op_kind(field<std::string>(o, "kind"));
        op.qubits = field<std::vector<size_t>>(o, "qubits");
        if (op.kind == OpKind::Unitary) {
            op.gate = parse_gate_name(field<std::string>(o, "gate"));
        }
        if (op.kind == OpKind::PauliMeasure) {
            op.observable = PauliString::from_string(field<std::string>(o, "observable"));
            if (op.observable.num_qubits() != op.qubits.size()) {
                throw ParseError(0, "observable length differs from qubit count");
            }
        }
        if (o.contains("graph")) {
            op.graph = from_graph6(field<std::string>(o, "graph"));
            if (op.graph.num_vertices() != op.qubits.size()) {
                throw ParseError(0, "op graph size differs from qubit count");
            }
        }
        if (op.kind == OpKind::PauliCorrect) {
            op.cond = field<std::vector<size_t>>(o, "cond");
            op.correction = PauliString::from_string(field<std::string>(o, "correction"));
            if (op.correction.num_qubits() != op.qubits.size()) {
                throw ParseError(0, "correction length differs from qubit count");
            }
        }
        s.ops.push_back(std::move(op));
    }
    const Json &m = j.at("metrics");
    s.claims.n_ancilla = field<size_t>(m, "n");
    s.claims.s_max = field<size_t>(m, "s");
    s.claims.l_depth = field<size_t>(m, "l");
    s.claims.l_content = m.contains("l_content") ? field<size_t>(m, "l_content") : 0;
    if (j.contains("notes")) {
        s.notes = field<std::vector<std::string>>(j, "notes");
    }
    return s;
}

Schedule schedule_from_string(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(0, std::string("malformed schedule JSON: ") + e.what());
    }
    try {
        return schedule_from_json(j);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, std::string("malformed schedule JSON: ") + e.what());
    }
}

}  // namespace graphprep

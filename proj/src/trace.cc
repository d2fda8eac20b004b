// Copyright 2026 The dsc Authors
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

#include <sstream>

#include "dsc/protocols.h"

namespace dsc {

std::string state_name(CliffordState s) {
    switch (s) {
        case CliffordState::Zero: return "0";
        case CliffordState::One: return "1";
        case CliffordState::Plus: return "+";
        case CliffordState::Minus: return "-";
        case CliffordState::PlusI: return "+i";
        case CliffordState::MinusI: return "-i";
    }
    return "?";
}

CliffordState parse_state(const std::string& s) {
    for (auto c : all_clifford_states()) {
        if (state_name(c) == s) return c;
    }
    throw std::invalid_argument("unknown state '" + s + "' (expected 0, 1, +, -, +i or -i)");
}

const std::vector<CliffordState>& all_clifford_states() {
    static const std::vector<CliffordState> kAll = {CliffordState::Zero, CliffordState::One,   CliffordState::Plus,
                                                    CliffordState::Minus, CliffordState::PlusI, CliffordState::MinusI};
    return kAll;
}

namespace {

PauliString y_of(const PauliString& x, const PauliString& z) {
    PauliString y = x * z;
    y.set_log_i(y.log_i() + 1);
    return y;
}

}  // namespace

PauliString state_stabilizer(CliffordState s, const PauliString& x, const PauliString& z) {
    switch (s) {
        case CliffordState::Zero: return z;
        case CliffordState::One: return -z;
        case CliffordState::Plus: return x;
        case CliffordState::Minus: return -x;
        case CliffordState::PlusI: return y_of(x, z);
        case CliffordState::MinusI: return -y_of(x, z);
    }
    throw std::logic_error("bad state");
}

std::string ProtocolTrace::pauli_text(const PauliString& p) const {
    std::string out = p.log_i() & 2 ? "-" : "";
    if (p.log_i() & 1) out += "i";
    bool first = true;
    for (auto q : p.support()) {
        if (!first) out += ' ';
        first = false;
        out += p.at(q);
        out += q < labels_.size() ? labels_[q] : std::to_string(q);
    }
    if (first) out += "I";
    return out;
}

const TraceStep& ProtocolTrace::find(const std::string& op) const {
    for (const auto& s : steps_) {
        if (s.op == op) return s;
    }
    throw std::out_of_range("trace has no step '" + op + "'");
}

nlohmann::ordered_json ProtocolTrace::step_json(std::size_t i) const {
    const auto& s = steps_.at(i);
    nlohmann::ordered_json j;
    j["step"] = i;
    j["op"] = s.op;
    j["operator"] = s.target;
    if (s.record) {
        j["outcome"] = s.record->outcome;
        j["deterministic"] = s.record->deterministic;
    } else {
        j["outcome"] = nullptr;
        j["deterministic"] = nullptr;
    }
    if (!s.correction) {
        j["correction"] = nullptr;
    } else if (s.correction->is_identity()) {
        j["correction"] = "noop";
    } else {
        j["correction"] = pauli_text(*s.correction);
    }
    return j;
}

std::string ProtocolTrace::jsonl() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps_.size(); ++i) out << step_json(i).dump() << '\n';
    return out.str();
}

const LogicalQubit& LogicalFrame::at(const std::string& name) const {
    for (const auto& q : qubits) {
        if (q.name == name) return q;
    }
    throw std::out_of_range("no logical qubit '" + name + "'");
}

LogicalQubit& LogicalFrame::at(const std::string& name) {
    return const_cast<LogicalQubit&>(static_cast<const LogicalFrame&>(*this).at(name));
}

PauliString logical_operator(const LogicalFrame& frame, const PauliString& logical) {
    if (logical.n_qubits() != frame.qubits.size()) throw DimensionError("logical operator size does not match frame");
    if (frame.qubits.empty()) throw std::invalid_argument("empty frame");
    PauliString out(frame.qubits.front().z.n_qubits());
    out.set_log_i(logical.log_i());
    for (std::size_t j = 0; j < frame.qubits.size(); ++j) {
        const auto& q = frame.qubits[j];
        switch (logical.at(j)) {
            case 'X': out *= q.x; break;
            case 'Z': out *= q.z; break;
            case 'Y': out *= y_of(q.x, q.z); break;
            default: break;
        }
    }
    return out;
}

Expectation logical_expectation(const StabilizerTableau& t, const LogicalFrame& frame, const PauliString& logical) {
    return t.expectation(logical_operator(frame, logical));
}

std::vector<PauliString> logical_state(const StabilizerTableau& t, const LogicalFrame& frame) {
    std::size_t k = frame.qubits.size();
    if (k > 6) throw std::invalid_argument("logical_state enumerates 4^k operators; k must be at most 6");
    std::vector<PauliString> found;
    std::size_t total = std::size_t{1} << (2 * k);
    for (std::size_t code = 1; code < total; ++code) {
        PauliString p(k);
        for (std::size_t j = 0; j < k; ++j) p.set(j, (code >> (2 * j)) & 1, (code >> (2 * j + 1)) & 1);
        auto e = logical_expectation(t, frame, p);
        if (e == Expectation::Indeterminate) continue;
        if (e == Expectation::Minus) p = -p;
        found.push_back(p);
    }
    return canonical_generators(found);
}

}  // namespace dsc

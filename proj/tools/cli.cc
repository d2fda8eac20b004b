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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "dsc/cat.h"
#include "dsc/fixtures.h"
#include "dsc/layout_io.h"
#include "dsc/protocols.h"
#include "dsc/resources.h"

namespace dsc::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { Pretty, Json, Csv };

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

// Left-aligned columns separated by two spaces.
std::string pretty_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::ostringstream out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

std::string table(Format f, const std::vector<std::vector<std::string>>& rows) {
    if (f == Format::Pretty) return pretty_table(rows);
    std::string out;
    for (const auto& r : rows) out += csv_row(r);
    return out;
}

std::string sign_text(int v) { return v > 0 ? "+1" : v < 0 ? "-1" : "0"; }

CliffordState parse_state_arg(const std::string& s) {
    static const std::map<std::string, std::string> kWords = {{"zero", "0"},   {"one", "1"},      {"plus", "+"},
                                                              {"minus", "-"},  {"plus_i", "+i"},  {"minus_i", "-i"}};
    auto it = kWords.find(s);
    return parse_state(it == kWords.end() ? s : it->second);
}

std::map<std::string, int> parse_forced(const std::vector<std::string>& items, const std::set<std::string>& valid) {
    std::map<std::string, int> out;
    static const std::regex kForm(R"(([A-Za-z0-9_]+)=([+-]?1))");
    for (const auto& item : items) {
        std::smatch m;
        if (!std::regex_match(item, m, kForm)) throw ValidationError("--force expects label=+1 or label=-1, got '" + item + "'");
        if (!valid.count(m[1])) {
            std::string list;
            for (const auto& v : valid) list += (list.empty() ? "" : ", ") + v;
            throw ValidationError("unknown measurement label '" + m[1].str() + "' (valid: " + list + ")");
        }
        out[m[1]] = m[2].str().front() == '-' ? -1 : 1;
    }
    return out;
}

Fixture load_fixture(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) {
        Fixture f;
        f.name = std::filesystem::path(spec).stem().string();
        f.layout = load_layout(spec);
        return f;
    }
    auto names = fixture_names();
    if (std::find(names.begin(), names.end(), spec) == names.end()) {
        throw ValidationError("'" + spec + "' is neither a layout file nor a built-in fixture");
    }
    return make_fixture(spec);
}

std::string qubit_name(const Layout& l, std::size_t q) {
    return l.qubits[q].name.empty() ? "q" + std::to_string(q) : l.qubits[q].name;
}

// ---------------------------------------------------------------------------------------------

struct Common {
    std::uint64_t seed = 0;
    Format format = Format::Pretty;
};

ojson trace_json(const ProtocolTrace& t) {
    ojson a = ojson::array();
    for (std::size_t i = 0; i < t.steps().size(); ++i) a.push_back(t.step_json(i));
    return a;
}

std::vector<std::string> trace_fields(const ojson& s) {
    auto str = [](const ojson& v) {
        if (v.is_null()) return std::string();
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
        return sign_text(v.get<int>());
    };
    return {std::to_string(s["step"].get<std::size_t>()), str(s["op"]), str(s["operator"]), str(s["outcome"]),
            str(s["deterministic"]), str(s["correction"])};
}

ojson injection_stage_json(const InjectionResult& r) {
    ojson j;
    j["trace"] = trace_json(r.trace);
    j["generators"] = ojson::array();
    for (const auto& g : r.state.canonicalize()) j["generators"].push_back(r.trace.pauli_text(g));
    const auto& q = r.frame.at("L");
    j["logical"] = {{"z", r.trace.pauli_text(q.z)},
                    {"x", r.trace.pauli_text(q.x)},
                    {"expectation",
                     {{"X", static_cast<int>(r.state.expectation(q.x))},
                      {"Y", static_cast<int>(r.state.expectation(state_stabilizer(CliffordState::PlusI, q.x, q.z)))},
                      {"Z", static_cast<int>(r.state.expectation(q.z))}}}};
    return j;
}

int cmd_inject(const Common& c, const std::string& state_arg, const std::vector<std::string>& force, bool alt,
               bool no_convert, std::ostream& out) {
    auto state = parse_state_arg(state_arg);
    ProtocolOptions o{parse_forced(force, {"mx5", "mz2457", "mz3568", "mx5_merge"}), alt, c.seed};
    auto inj = inject_defect_qubit(state, o);
    std::vector<std::pair<std::string, ojson>> stages = {{"injection", injection_stage_json(inj)}};
    if (!no_convert) {
        auto conv = convert_to_deformation(inj, o);
        auto j = injection_stage_json(conv);
        // The conversion trace repeats the injection steps; keep only its own.
        ojson own = ojson::array();
        for (std::size_t i = inj.trace.steps().size(); i < j["trace"].size(); ++i) own.push_back(j["trace"][i]);
        j["trace"] = own;
        stages.push_back({"conversion", j});
    }

    if (c.format == Format::Json) {
        ojson j;
        j["state"] = state_name(state);
        for (auto& [name, s] : stages) j[name] = s;
        out << j.dump(2) << '\n';
    } else if (c.format == Format::Csv) {
        std::vector<std::vector<std::string>> rows = {{"stage", "step", "op", "operator", "outcome", "deterministic", "correction"}};
        for (auto& [name, s] : stages) {
            for (const auto& step : s["trace"]) {
                auto f = trace_fields(step);
                f.insert(f.begin(), name);
                rows.push_back(f);
            }
        }
        out << table(Format::Csv, rows);
    } else {
        out << "state " << state_name(state) << '\n';
        for (auto& [name, s] : stages) {
            out << '\n' << name << " trace\n";
            std::vector<std::vector<std::string>> rows = {{"step", "op", "operator", "outcome", "deterministic", "correction"}};
            for (const auto& step : s["trace"]) rows.push_back(trace_fields(step));
            out << pretty_table(rows);
            out << name << " generators\n";
            for (const auto& g : s["generators"]) out << "  " << g.get<std::string>() << '\n';
            const auto& l = s["logical"];
            out << "logical Z = " << l["z"].get<std::string>() << ", X = " << l["x"].get<std::string>() << '\n';
            out << "expectation X " << sign_text(l["expectation"]["X"]) << ", Y " << sign_text(l["expectation"]["Y"])
                << ", Z " << sign_text(l["expectation"]["Z"]) << '\n';
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------------------------

std::vector<PauliString> ideal_cnot(CliffordState c, CliffordState t) {
    std::vector<PauliString> in = {state_stabilizer(c, PauliString::parse("X_"), PauliString::parse("Z_")),
                                   state_stabilizer(t, PauliString::parse("_X"), PauliString::parse("_Z"))};
    auto s = StabilizerTableau::from_generators(in);
    s.cnot(0, 1);
    return s.canonicalize();
}

std::string gens_text(const std::vector<PauliString>& gens) {
    std::string out;
    for (const auto& g : gens) out += (out.empty() ? "" : " ") + g.str();
    return out;
}

// Names the two single-qubit states when the logical state is a product of them.
std::string product_text(const std::vector<PauliString>& gens) {
    auto t = StabilizerTableau::from_generators(gens);
    std::string out;
    for (std::size_t q = 0; q < 2; ++q) {
        std::string found;
        for (auto s : all_clifford_states()) {
            PauliString x(2), z(2);
            x.set(q, 'X');
            z.set(q, 'Z');
            if (t.expectation(state_stabilizer(s, x, z)) == Expectation::Plus) found = state_name(s);
        }
        if (found.empty()) return "entangled";
        out += (q ? "," : "") + found;
    }
    return out;
}

int cmd_cnot(const Common& c, const std::string& control, const std::string& target, bool sweep,
             const std::string& mode_arg, int rounds, const std::vector<std::string>& force, bool alt, std::ostream& out) {
    if (rounds < 1 || rounds % 2 == 0) throw ValidationError("--rounds must be a positive odd number");
    std::vector<MergeMode> modes;
    if (mode_arg == "both") modes = {MergeMode::Sequential, MergeMode::Parallel};
    else modes = {parse_merge_mode(mode_arg)};
    std::set<std::string> labels = {"mzS", "mx3", "mxb", "mx6", "mxe"};
    for (int r = 1; r <= rounds; ++r) labels.insert("zz" + std::to_string(r));
    ProtocolOptions o{parse_forced(force, labels), alt, c.seed};

    std::vector<std::pair<CliffordState, CliffordState>> pairs;
    if (sweep) {
        for (auto a : all_clifford_states()) {
            for (auto b : all_clifford_states()) pairs.push_back({a, b});
        }
    } else {
        if (control.empty() || target.empty()) throw ValidationError("cnot needs --control and --target, or --sweep");
        pairs.push_back({parse_state_arg(control), parse_state_arg(target)});
    }

    struct Row {
        CliffordState c, t;
        std::vector<std::string> outputs;
        std::string expected;
        bool match = true;
        bool agree = true;
    };
    std::vector<Row> rows(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        Row row{a, b, {}, gens_text(ideal_cnot(a, b)), true, true};
        std::vector<std::vector<PauliString>> got;
        for (auto m : modes) {
            ProtocolOptions oi = o;
            oi.seed = o.seed + i;
            auto r = cnot(a, b, m, oi, rounds);
            got.push_back(logical_state(r.state, r.frame));
            row.outputs.push_back(gens_text(got.back()));
            row.match = row.match && got.back() == ideal_cnot(a, b);
        }
        row.agree = std::all_of(got.begin(), got.end(), [&](const auto& g) { return g == got.front(); });
        rows[i] = row;
    }
    bool all_ok = std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.match && r.agree; });

    if (c.format == Format::Json) {
        ojson j;
        j["modes"] = ojson::array();
        for (auto m : modes) j["modes"].push_back(merge_mode_name(m));
        j["rounds"] = rounds;
        j["rows"] = ojson::array();
        for (const auto& r : rows) {
            ojson jr;
            jr["control"] = state_name(r.c);
            jr["target"] = state_name(r.t);
            for (std::size_t k = 0; k < modes.size(); ++k) jr[merge_mode_name(modes[k])] = r.outputs[k];
            jr["expected"] = r.expected;
            jr["product"] = product_text(ideal_cnot(r.c, r.t));
            jr["match"] = r.match;
            if (modes.size() > 1) jr["modes_agree"] = r.agree;
            j["rows"].push_back(jr);
        }
        j["all_match"] = all_ok;
        out << j.dump(2) << '\n';
    } else {
        std::vector<std::string> head = {"control", "target"};
        for (auto m : modes) head.push_back(merge_mode_name(m));
        head.insert(head.end(), {"expected", "product", "match"});
        if (modes.size() > 1) head.push_back("modes_agree");
        std::vector<std::vector<std::string>> t = {head};
        for (const auto& r : rows) {
            std::vector<std::string> f = {state_name(r.c), state_name(r.t)};
            f.insert(f.end(), r.outputs.begin(), r.outputs.end());
            f.insert(f.end(), {r.expected, product_text(ideal_cnot(r.c, r.t)), r.match ? "yes" : "no"});
            if (modes.size() > 1) f.push_back(r.agree ? "yes" : "no");
            t.push_back(f);
        }
        out << table(c.format, t);
        if (c.format == Format::Pretty) out << (all_ok ? "all rows match the ideal CNOT\n" : "MISMATCH\n");
    }
    return all_ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------------------------

int cmd_distance(const Common& c, const std::string& spec, std::ostream& out) {
    auto f = load_fixture(spec);
    const auto& l = f.layout;
    std::vector<std::vector<std::string>> rows = {{"qubit", "x_distance", "z_distance", "distance", "declared"}};
    ojson j;
    j["layout"] = f.name;
    j["data_qubits"] = l.n_data();
    j["stabilizers"] = l.stabilizers.size();
    j["independent_stabilizers"] = static_cast<int>(l.n_data()) - logical_count(l);
    j["logical_qubits"] = logical_count(l);
    j["qubits"] = ojson::array();
    for (std::size_t q = 0; q < l.qubits.size(); ++q) {
        auto d = chain_distances(l, q);
        rows.push_back({qubit_name(l, q), std::to_string(d.x), std::to_string(d.z), std::to_string(d.min()),
                        std::to_string(l.qubits[q].declared_distance)});
        j["qubits"].push_back({{"qubit", qubit_name(l, q)}, {"x_distance", d.x}, {"z_distance", d.z},
                               {"distance", d.min()}, {"declared", l.qubits[q].declared_distance}});
    }
    if (c.format == Format::Json) {
        out << j.dump(2) << '\n';
    } else {
        if (c.format == Format::Pretty) {
            out << f.name << ": " << l.n_data() << " data qubits, " << l.stabilizers.size() << " stabilizers ("
                << static_cast<int>(l.n_data()) - logical_count(l) << " independent), " << logical_count(l) << " logical qubits\n";
        }
        out << table(c.format, rows);
    }
    return kExitOk;
}

int cmd_check(const Common& c, const std::string& spec, std::optional<int> target, std::ostream& out) {
    auto f = load_fixture(spec);
    auto v = placement_check(f.layout, target);
    std::vector<std::vector<std::string>> rows = {{"type", "qubits", "witness", "message"}};
    ojson j;
    j["layout"] = f.name;
    j["clean"] = v.empty();
    j["violations"] = ojson::array();
    for (const auto& x : v) {
        std::string qs;
        for (auto q : x.qubits) qs += (qs.empty() ? "" : " ") + qubit_name(f.layout, q);
        rows.push_back({violation_name(x.type), qs, std::to_string(x.witness), x.message});
        j["violations"].push_back(
            {{"type", violation_name(x.type)}, {"qubits", qs}, {"witness", x.witness}, {"message", x.message}});
    }
    if (c.format == Format::Json) {
        out << j.dump(2) << '\n';
    } else if (c.format == Format::Csv) {
        out << table(Format::Csv, rows);
    } else {
        out << f.name << ": " << (v.empty() ? "clean" : std::to_string(v.size()) + " violation(s)") << '\n';
        if (!v.empty()) out << pretty_table(rows);
    }
    return kExitOk;
}

int cmd_syndrome(const Common& c, const std::string& spec, const std::vector<std::string>& errors, std::ostream& out) {
    auto f = load_fixture(spec);
    const auto& l = f.layout;
    static const std::regex kForm(R"(([XYZ])[:@]\(?(\d+),(\d+)\)?)");
    std::map<Coord, char> chain;
    for (const auto& e : errors) {
        std::smatch m;
        if (std::regex_match(e, m, kForm)) {
            chain[Coord{std::stoi(m[2]), std::stoi(m[3])}] = m[1].str().front();
        } else if (f.marks.count(e.substr(2)) && e.size() > 2 && e[1] == ':') {
            chain[f.marks.at(e.substr(2))] = e[0];
        } else {
            throw ValidationError("--error expects P:r,c with P in X, Y, Z, got '" + e + "'");
        }
    }
    auto t = encode_layout(l, c.seed);
    try {
        inject_error(l, t, chain);
    } catch (const LayoutError& e) {
        throw ValidationError(e.what());
    }
    auto syn = extract_syndrome(l, t);
    std::vector<std::vector<std::string>> rows = {{"stabilizer", "kind", "super", "owner", "weight"}};
    ojson j;
    j["layout"] = f.name;
    j["flipped"] = ojson::array();
    for (auto i : syn) {
        const auto& s = l.stabilizers[i];
        std::string owner = s.owner >= 0 ? qubit_name(l, static_cast<std::size_t>(s.owner)) : "";
        rows.push_back({std::to_string(i), std::string(1, kind_char(s.kind)), s.is_super ? "yes" : "no", owner,
                        std::to_string(s.support.size())});
        j["flipped"].push_back({{"stabilizer", i}, {"kind", std::string(1, kind_char(s.kind))}, {"super", s.is_super},
                                {"owner", owner}, {"weight", s.support.size()}});
    }
    if (c.format == Format::Json) {
        out << j.dump(2) << '\n';
    } else {
        if (c.format == Format::Pretty) out << f.name << ": " << syn.size() << " stabilizer(s) flipped\n";
        out << table(c.format, rows);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------------------------

int cmd_schedule(const Common& c, int d, const std::string& variant_arg, int d_min, int d_max, int cat_n,
                 const std::string& topology, std::ostream& out) {
    if (cat_n > 0) {
        auto circuit = build_cat(static_cast<std::size_t>(cat_n), parse_topology(topology));
        if (c.format == Format::Json) {
            out << cat_to_json(circuit).dump(2) << '\n';
            return kExitOk;
        }
        std::vector<std::vector<std::string>> rows = {{"layer", "gate", "qubits", "condition"}};
        auto labels = circuit.labels();
        for (std::size_t i = 0; i < circuit.layers.size(); ++i) {
            for (const auto& g : circuit.layers[i]) {
                std::string qs, cond;
                for (auto q : g.qubits) qs += (qs.empty() ? "" : " ") + labels[q];
                for (auto q : g.condition) cond += (cond.empty() ? "" : " ") + labels[q];
                rows.push_back({std::to_string(i + 1), g.gate, qs, cond});
            }
        }
        out << table(c.format, rows);
        return kExitOk;
    }
    if (d_min > 0 || d_max > 0) {
        if (d_min < 2 || d_max < d_min) throw ValidationError("--d-min/--d-max must give a range starting at 2 or more");
        auto csv = step_table_csv(d_min, d_max);
        if (c.format == Format::Csv) {
            out << csv;
            return kExitOk;
        }
        std::vector<std::vector<std::string>> rows;
        std::istringstream in(csv);
        for (std::string line; std::getline(in, line);) {
            std::vector<std::string> f;
            std::istringstream ls(line);
            for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
            rows.push_back(f);
        }
        if (c.format == Format::Pretty) {
            out << pretty_table(rows);
        } else {
            ojson j = ojson::array();
            for (std::size_t i = 1; i < rows.size(); ++i) {
                ojson r;
                for (std::size_t k = 0; k < rows[0].size(); ++k) {
                    if (k == 1) r[rows[0][k]] = rows[i][k];
                    else r[rows[0][k]] = std::stoi(rows[i][k]);
                }
                j.push_back(r);
            }
            out << j.dump(2) << '\n';
        }
        return kExitOk;
    }
    auto variant = parse_variant(variant_arg);
    auto j = schedule_to_json(d, variant);
    if (c.format == Format::Json) {
        out << j.dump(2) << '\n';
    } else if (c.format == Format::Csv) {
        auto sc = step_count(d, variant);
        out << "d,variant,prep,verify,propagate,basis,measure,total\n"
            << d << ',' << variant_name(variant) << ',' << sc.prep << ',' << sc.verify << ',' << sc.propagate << ','
            << sc.basis_change << ',' << sc.measure << ',' << sc.total() << '\n';
    } else {
        std::vector<std::vector<std::string>> rows = {{"step", "category", "action"}};
        for (const auto& s : j["steps"]) {
            rows.push_back({std::to_string(s["step"].get<int>()), s["category"], s["action"]});
        }
        out << pretty_table(rows);
        const auto& k = j["counts"];
        out << "total " << k["total"].get<int>() << " = prep " << k["prep"].get<int>() << " + verify "
            << k["verify"].get<int>() << " + propagate " << k["propagate"].get<int>() << " + basis "
            << k["basis"].get<int>() << " + measure " << k["measure"].get<int>() << '\n';
    }
    return kExitOk;
}

int cmd_resources(const Common& c, int d_min, int d_max, const std::string& schemes_arg, std::ostream& out) {
    std::vector<Scheme> schemes;
    std::istringstream in(schemes_arg);
    for (std::string s; std::getline(in, s, ',');) {
        if (!s.empty()) schemes.push_back(parse_scheme(s));
    }
    auto r = compare(d_min, d_max, schemes);
    if (c.format == Format::Json) {
        out << report_json(r).dump(2) << '\n';
    } else if (c.format == Format::Csv) {
        out << report_csv(r);
    } else {
        std::vector<std::vector<std::string>> rows;
        std::istringstream csv(report_csv(r));
        for (std::string line; std::getline(csv, line);) {
            std::vector<std::string> f;
            std::istringstream ls(line);
            for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
            rows.push_back(f);
        }
        out << pretty_table(rows);
        for (const auto& n : r.notes) out << "note: " << n << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deformation-based surface code simulator and planner", "dsc"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    std::string format = "pretty";
    std::string out_path;
    app.add_option("--seed", common.seed, "PRNG seed");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    std::vector<std::string> force;
    bool alt = false;

    auto* inject = app.add_subcommand("inject", "Inject a state into a defect qubit and convert it");
    std::string state = "0";
    bool no_convert = false;
    inject->add_option("--state", state, "0, 1, +, -, +i, -i (or zero, one, plus, minus, plus_i, minus_i)");
    inject->add_option("--force", force, "Force a measurement outcome, label=+1 or label=-1");
    inject->add_flag("--alternative", alt, "Use the alternative correction operators");
    inject->add_flag("--no-convert", no_convert, "Stop after injection");

    auto* cnot_cmd = app.add_subcommand("cnot", "Run the surgery CNOT and compare with the ideal gate");
    std::string control, target, mode = "sequential";
    bool sweep = false;
    int rounds = 3;
    cnot_cmd->add_option("--control", control, "Control input state");
    cnot_cmd->add_option("--target", target, "Target input state");
    cnot_cmd->add_flag("--sweep", sweep, "All 36 pairs of input states");
    cnot_cmd->add_option("--mode", mode, "sequential, parallel or both")
        ->check(CLI::IsMember({"sequential", "parallel", "both"}));
    cnot_cmd->add_option("--rounds", rounds, "ZZ measurement rounds (odd)");
    cnot_cmd->add_option("--force", force, "Force a measurement outcome, label=+1 or label=-1");
    cnot_cmd->add_flag("--alternative", alt, "Use the alternative correction operators");

    std::string fixture;
    auto* distance = app.add_subcommand("distance", "Code distance of every qubit of a layout");
    distance->add_option("fixture,--fixture", fixture, "Built-in fixture name or layout JSON file")->required();

    auto* check = app.add_subcommand("check", "Placement check of a layout");
    std::optional<int> check_target;
    check->add_option("fixture,--fixture", fixture, "Built-in fixture name or layout JSON file")->required();
    check->add_option("--target", check_target, "Required distance (default: each qubit's own)");

    auto* syndrome = app.add_subcommand("syndrome", "Stabilizers flipped by a Pauli error");
    std::vector<std::string> errors;
    syndrome->add_option("fixture,--fixture", fixture, "Built-in fixture name or layout JSON file")->required();
    syndrome->add_option("--error", errors, "Error as P:r,c (P in X, Y, Z) or P:mark")->required();

    auto* schedule = app.add_subcommand("schedule", "Superstabilizer measurement schedule and step counts");
    int d = 5, d_min = 0, d_max = 0, cat_n = 0;
    std::string variant = "corner_shared", topology = "linear";
    schedule->add_option("--d", d, "Code distance");
    schedule->add_option("--variant", variant, "corner_shared or inner_augmented");
    schedule->add_option("--d-min", d_min, "Step table from this distance");
    schedule->add_option("--d-max", d_max, "Step table up to this distance");
    schedule->add_option("--cat", cat_n, "Print the preparation circuit of a cat state of this length");
    schedule->add_option("--topology", topology, "linear or loop (with --cat)");

    auto* resources = app.add_subcommand("resources", "Physical qubits per logical qubit against the planar code");
    int r_min = 3, r_max = 25;
    std::string schemes = "abstract,thickness2,lengthened,local_block";
    resources->add_option("--d-min,--dmin", r_min, "Smallest distance");
    resources->add_option("--d-max,--dmax", r_max, "Largest distance");
    resources->add_option("--schemes", schemes, "Comma-separated: abstract, thickness2, lengthened, local_block");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    common.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Pretty;

    std::ostringstream buf;
    int code = kExitOk;
    try {
        if (*inject) code = cmd_inject(common, state, force, alt, no_convert, buf);
        else if (*cnot_cmd) code = cmd_cnot(common, control, target, sweep, mode, rounds, force, alt, buf);
        else if (*distance) code = cmd_distance(common, fixture, buf);
        else if (*check) code = cmd_check(common, fixture, check_target, buf);
        else if (*syndrome) code = cmd_syndrome(common, fixture, errors, buf);
        else if (*schedule) code = cmd_schedule(common, d, variant, d_min, d_max, cat_n, topology, buf);
        else if (*resources) code = cmd_resources(common, r_min, r_max, schemes, buf);
    } catch (const ContradictionError& e) {
        err << "contradiction: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    if (out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << out_path << '\n';
            return kExitInvalid;
        }
        f << buf.str();
    }
    return code;
}

}  // namespace dsc::cli

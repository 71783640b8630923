// Copyright 2026 The cwsgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWSGRAPH_IO_HPP
#define CWSGRAPH_IO_HPP

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwsgraph/cws.hpp"
#include "cwsgraph/errors.hpp"
#include "cwsgraph/f2core.hpp"
#include "cwsgraph/gf2m.hpp"
#include "cwsgraph/graphstate.hpp"
#include "cwsgraph/protosim.hpp"
#include "cwsgraph/tentpeg.hpp"

namespace cwsgraph {

using Json = nlohmann::ordered_json;

inline std::string to_hex(std::uint64_t v) {
    std::ostringstream out;
    out << "0x" << std::hex << v;
    return out.str();
}

inline std::uint64_t parse_uint(const std::string &s) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(s, &used, 0);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        fail(ErrorCode::ParseError, "not an unsigned integer: '" + s + "'");
    }
}

inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
}

inline void write_json_file(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

// Field elements: {"m": 4, "value": "0x2"}.

inline Json field_element_to_json(const FieldElement &e) {
    return Json{{"m", e.field().degree()}, {"value", to_hex(e.value())}};
}

inline FieldElement field_element_from_json(const Json &j) {
    try {
        auto field = make_field(j.at("m").get<unsigned>());
        const auto &v = j.at("value");
        std::uint64_t value = v.is_string() ? parse_uint(v.get<std::string>()) : v.get<std::uint64_t>();
        if (value >= field.size()) fail(ErrorCode::ParseError, "field element value out of range");
        return field.element(value);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::ParseError, std::string("malformed field element: ") + e.what());
    }
}

// Graphs: {"lattice": [n1, ...]} or {"n": N, "edges": [[i, j], ...]}.

inline Json graph_to_json(const Graph &g) {
    if (!g.lattice_dims().empty()) return Json{{"lattice", g.lattice_dims()}};
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return Json{{"n", g.num_vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json &j) {
    try {
        if (j.contains("lattice")) {
            auto dims = j.at("lattice").get<std::vector<std::size_t>>();
            return lattice(dims);
        }
        std::size_t n = j.at("n").get<std::size_t>();
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto &e : j.value("edges", Json::array())) {
            if (!e.is_array() || e.size() != 2) fail(ErrorCode::ParseError, "edges must be pairs");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        return Graph::from_edges(n, edges);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::ParseError, std::string("malformed graph: ") + e.what());
    }
}

/// Shortcuts: cN / cycle:N, path:N, complete:N, lattice:AxB..., or a JSON file.
inline Graph parse_graph_spec(const std::string &spec) {
    std::smatch m;
    static const std::regex cycle_re(R"(^(?:c|cycle:)(\d+)$)");
    static const std::regex path_re(R"(^path:(\d+)$)");
    static const std::regex complete_re(R"(^(?:k|complete:)(\d+)$)");
    static const std::regex lattice_re(R"(^lattice:(\d+(?:x\d+)*)$)");
    if (std::regex_match(spec, m, cycle_re)) return cycle_graph(parse_uint(m[1]));
    if (std::regex_match(spec, m, path_re)) return path_graph(parse_uint(m[1]));
    if (std::regex_match(spec, m, complete_re)) return complete_graph(parse_uint(m[1]));
    if (std::regex_match(spec, m, lattice_re)) {
        std::vector<std::size_t> dims;
        std::stringstream ss(m[1]);
        std::string part;
        while (std::getline(ss, part, 'x')) dims.push_back(parse_uint(part));
        return lattice(dims);
    }
    return graph_from_json(read_json_file(spec));
}

// Codes: {"n": N, "rows": ["0101...", ...], "kind": "generator" | "parity"}.

inline Json code_to_json(const LinearCode &c) {
    Json rows = Json::array();
    for (const auto &r : c.generator().row_list()) rows.push_back(r.to_string());
    Json j{{"n", c.length()}, {"k", c.dimension()}, {"kind", "generator"}, {"rows", rows}};
    const auto &o = c.origin();
    if (o.family != CodeFamily::generic) {
        Json origin{{"family", code_family_name(o.family)}, {"r", o.r}};
        if (o.alpha) origin["alpha"] = field_element_to_json(*o.alpha);
        j["origin"] = origin;
    }
    return j;
}

inline LinearCode code_from_json(const Json &j) {
    try {
        std::size_t n = j.at("n").get<std::size_t>();
        std::vector<F2Vector> rows;
        for (const auto &r : j.at("rows")) {
            auto v = F2Vector::from_string(r.get<std::string>());
            if (v.size() != n) fail(ErrorCode::ParseError, "row length differs from n");
            rows.push_back(std::move(v));
        }
        F2Matrix m(n, std::move(rows));
        std::string kind = j.value("kind", "generator");
        if (kind == "generator") return LinearCode::from_generator(m);
        if (kind == "parity") return LinearCode::from_parity(m);
        fail(ErrorCode::ParseError, "kind must be 'generator' or 'parity'");
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::ParseError, std::string("malformed code: ") + e.what());
    }
}

/// Primitive α used by default: the first hit of the mod-3 search for the
/// cyclic family, the table generator for the two-dimensional family.
inline LinearCode build_family(const std::string &family, unsigned r, std::optional<FieldElement> alpha = {}) {
    if (family == "cyclic") {
        auto a = alpha ? *alpha : find_primitive_mod3(make_field(2 * r));
        return build_cr(r, a);
    }
    if (family == "two_dim_cyclic") {
        auto a = alpha ? *alpha : make_field(4 * r).primitive();
        return build_cu(r, a);
    }
    fail(ErrorCode::ParseError, "unknown code family '" + family + "'");
}

/// Shortcuts: repN / repetition:N, zero:N, crR / cr:R, cuR / cu:R,
/// rows:110,011 (generator rows), or a JSON file.
inline LinearCode parse_code_spec(const std::string &spec) {
    std::smatch m;
    if (spec.rfind("rows:", 0) == 0) {
        std::vector<F2Vector> rows;
        std::stringstream ss(spec.substr(5));
        std::string part;
        while (std::getline(ss, part, ',')) rows.push_back(F2Vector::from_string(part));
        if (rows.empty()) fail(ErrorCode::ParseError, "rows: needs at least one row");
        std::size_t n = rows.front().size();
        for (const auto &r : rows) {
            if (r.size() != n) fail(ErrorCode::ParseError, "rows must have equal length");
        }
        return LinearCode::from_generator(F2Matrix(n, std::move(rows)));
    }
    static const std::regex rep_re(R"(^(?:rep|repetition:)(\d+)$)");
    static const std::regex zero_re(R"(^zero:(\d+)$)");
    static const std::regex cr_re(R"(^cr:?(\d+)$)");
    static const std::regex cu_re(R"(^cu:?(\d+)$)");
    if (std::regex_match(spec, m, rep_re)) return repetition_code(parse_uint(m[1]));
    if (std::regex_match(spec, m, zero_re)) return zero_code(parse_uint(m[1]));
    if (std::regex_match(spec, m, cr_re)) return build_family("cyclic", static_cast<unsigned>(parse_uint(m[1])));
    if (std::regex_match(spec, m, cu_re)) {
        return build_family("two_dim_cyclic", static_cast<unsigned>(parse_uint(m[1])));
    }
    Json j = read_json_file(spec);
    if (j.contains("family")) {
        std::optional<FieldElement> alpha;
        if (j.contains("alpha")) alpha = field_element_from_json(j.at("alpha"));
        return build_family(j.at("family").get<std::string>(), j.at("r").get<unsigned>(), alpha);
    }
    return code_from_json(j);
}

inline Json pauli_to_json(const PauliWord &p) {
    return Json{{"x", p.x().to_string()}, {"z", p.z().to_string()}, {"letters", p.to_letters()}};
}

inline Json certificate_to_json(const DistanceCertificate &c, bool with_timing = true) {
    Json j{{"m", c.m}, {"verdict", c.passed() ? "pass" : "violation"}};
    if (c.violation) {
        j["witness"] = pauli_to_json(c.violation->witness);
        j["codeword"] = c.violation->codeword.to_string();
    } else {
        j["witness"] = nullptr;
    }
    j["errors_scanned"] = c.errors_scanned;
    if (with_timing) j["wall_time_ms"] = c.wall_time_ms;
    return j;
}

inline Json uniformity_to_json(const UniformityResult &u, std::size_t cap) {
    Json j{{"cap", cap}, {"exact", u.exact}, {"m", u.m}};
    if (u.exact) {
        j["min_weight"] = u.min_weight;
        j["witness"] = u.witness;
    }
    j["subsets_examined"] = u.subsets_examined;
    return j;
}

inline Json transcript_to_json(const ProtocolTranscript &t) {
    Json corrections = Json::array();
    for (const auto &c : t.corrections) corrections.push_back(c.to_letters());
    return Json{{"outcomes", t.outcomes}, {"corrections", corrections}, {"seed", t.seed}, {"forced", t.forced}};
}

inline std::vector<int> parse_outcome_bits(const std::string &bits) {
    std::vector<int> out;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            out.push_back(c - '0');
        } else if (c != ',' && c != ' ') {
            fail(ErrorCode::ParseError, "outcome strings may only contain 0 and 1");
        }
    }
    return out;
}

/// Amplitude dump as "index,re,im" lines.
inline std::string amplitudes_csv(const StateVector &s) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "index,re,im\n";
    for (std::size_t i = 0; i < s.dimension(); i++) out << i << "," << s[i].real() << "," << s[i].imag() << "\n";
    return out.str();
}

}  // namespace cwsgraph

#endif

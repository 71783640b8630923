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

#ifndef CWSGRAPH_CLI_HPP
#define CWSGRAPH_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cwsgraph/io.hpp"

namespace cwsgraph {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitUsage = 2, kExitBudget = 3 };

struct RunReport {
    Json json;
    int exit_code = kExitPass;
};

/// Default thread count: CWSGRAPH_THREADS if set and positive, else 1.
inline unsigned env_threads() {
    const char *v = std::getenv("CWSGRAPH_THREADS");
    if (!v || !*v) return 1;
    try {
        auto t = parse_uint(v);
        return t == 0 ? detail::default_threads() : static_cast<unsigned>(t);
    } catch (const Error &) {
        return 1;
    }
}

/// Haar-random k-qubit state from a seeded generator.
inline StateVector random_state(std::size_t k, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Amplitude> amps(std::size_t{1} << k);
    for (auto &a : amps) a = {normal(rng), normal(rng)};
    StateVector s(k, std::move(amps));
    s.normalize();
    return s;
}

inline StateVector random_product_state(std::size_t k, std::mt19937_64 &rng) {
    StateVector s = random_state(1, rng);
    for (std::size_t q = 1; q < k; q++) s = StateVector::tensor(s, random_state(1, rng));
    return s;
}

namespace detail {

class Stopwatch {
   public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Json base_report(const std::string &command, Json inputs) {
    return Json{{"command", command}, {"inputs", std::move(inputs)}, {"results", Json::object()},
                {"timings", Json::object()}, {"seed", nullptr}, {"version", kVersion}};
}

inline std::string parameter_string(std::size_t n, std::size_t k, const DistanceReport &d) {
    std::string dist = d.exact ? std::to_string(*d.exact) + "(exact)" : std::to_string(d.lower_bound) + "(bound)";
    return "[" + std::to_string(n) + ", " + std::to_string(k) + ", " + dist + "]";
}

inline Json distance_to_json(const DistanceReport &d) {
    Json j{{"method", d.method}, {"lower_bound", d.lower_bound}};
    j["exact"] = d.exact ? Json(*d.exact) : Json(nullptr);
    j["witness_support"] = d.witness ? Json(d.witness->support()) : Json(nullptr);
    return j;
}

}  // namespace detail

struct ConstructArgs {
    std::optional<unsigned> cr;
    std::optional<unsigned> cu;
    std::optional<std::size_t> repetition;
    std::optional<std::string> spec;
    std::optional<std::string> alpha;
    std::optional<std::string> out;
    unsigned w_max = 8;
    std::uint64_t budget = MitmOptions{}.budget;
};

inline RunReport cmd_construct(const ConstructArgs &args) {
    detail::Stopwatch clock;
    int chosen = (args.cr ? 1 : 0) + (args.cu ? 1 : 0) + (args.repetition ? 1 : 0) + (args.spec ? 1 : 0);
    if (chosen != 1) fail(ErrorCode::ParseError, "give exactly one of --cr, --cu, --repetition, --spec");
    Json inputs{{"w_max", args.w_max}, {"budget", args.budget}};
    std::optional<FieldElement> alpha;
    auto parse_alpha = [&](unsigned m) {
        if (!args.alpha) return;
        inputs["alpha"] = *args.alpha;
        alpha = field_element_from_json(Json{{"m", m}, {"value", *args.alpha}});
    };
    LinearCode code;
    if (args.cr) {
        inputs["cr"] = *args.cr;
        parse_alpha(2 * *args.cr);
        code = build_family("cyclic", *args.cr, alpha);
    } else if (args.cu) {
        inputs["cu"] = *args.cu;
        parse_alpha(4 * *args.cu);
        code = build_family("two_dim_cyclic", *args.cu, alpha);
    } else if (args.repetition) {
        inputs["repetition"] = *args.repetition;
        code = repetition_code(*args.repetition);
    } else {
        inputs["spec"] = *args.spec;
        code = parse_code_spec(*args.spec);
    }
    RunReport report{detail::base_report("construct", inputs), kExitPass};
    auto &res = report.json["results"];
    res["n"] = code.length();
    res["k"] = code.dimension();
    if (code.origin().family != CodeFamily::generic) {
        res["origin"] = code_to_json(code)["origin"];
    }
    double build_ms = clock.ms();
    auto dist = distance_report(code, args.w_max, MitmOptions{args.budget});
    res["distance"] = detail::distance_to_json(dist);
    res["parameters"] = detail::parameter_string(code.length(), code.dimension(), dist);
    if (code.dimension() > 0 && code.dimension() <= EnumerationOptions{}.max_dimension) {
        auto patterns = pattern_scan(code);
        res["pattern_scan"] = Json{{"codewords_scanned", patterns.codewords_scanned},
                                   {"violations", patterns.violations.size()}};
    }
    if (args.out) {
        write_json_file(*args.out, code_to_json(code));
        res["code_file"] = *args.out;
    }
    report.json["timings"] = Json{{"build_ms", build_ms}, {"total_ms", clock.ms()}};
    return report;
}

struct VerifyArgs {
    std::string graph;
    std::string code;
    unsigned m = 2;
    unsigned threads = 1;
    std::uint64_t budget = VerifyOptions{}.budget;
    std::optional<std::size_t> d_classical;
    bool pure_z = false;
    bool skip_uniformity = false;
    std::uint64_t uniformity_budget = UniformityOptions{}.budget;
};

inline RunReport cmd_verify(const VerifyArgs &args) {
    detail::Stopwatch clock;
    Json inputs{{"graph", args.graph}, {"code", args.code}, {"m", args.m}, {"budget", args.budget},
                {"errors", args.pure_z ? "pure_z" : "all"}};
    if (args.d_classical) inputs["d_classical"] = *args.d_classical;
    CwsCode code(parse_graph_spec(args.graph), parse_code_spec(args.code));
    RunReport report{detail::base_report("verify", inputs), kExitPass};
    auto &res = report.json["results"];
    res["n"] = code.n();
    res["k"] = code.k();
    res["graph"] = graph_to_json(code.graph());
    if (code.tentpeg().origin().family != CodeFamily::generic) {
        res["code_origin"] = code_to_json(code.tentpeg())["origin"];
    }
    VerifyOptions vo;
    vo.threads = args.threads;
    vo.budget = args.budget;
    vo.errors = args.pure_z ? ErrorClass::pure_z : ErrorClass::all;
    auto cert = verify_distance(code, args.m, vo);
    res["certificate"] = certificate_to_json(cert, false);
    report.json["timings"]["verify_ms"] = cert.wall_time_ms;
    if (!cert.passed()) report.exit_code = kExitViolation;
    UniformityOptions uo{args.uniformity_budget, args.threads};
    if (!args.skip_uniformity) {
        try {
            res["uniformity"] = uniformity_to_json(uniformity(code.graph(), std::max(1u, args.m), uo),
                                                   std::max(1u, args.m));
        } catch (const Error &e) {
            if (e.code() != ErrorCode::CapTooLargeForBudget) throw;
            res["uniformity"] = Json{{"skipped", e.what()}};
        }
    }
    if (args.d_classical) {
        try {
            auto sc = sufficient_condition_details(code, *args.d_classical, uo);
            res["sufficient_condition"] = Json{{"holds", sc.holds}, {"degree", sc.degree},
                                               {"uniform_enough", sc.uniform_enough}};
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NotRegular && e.code() != ErrorCode::CapTooLargeForBudget) throw;
            res["sufficient_condition"] = Json{{"skipped", e.what()}};
        }
    }
    report.json["timings"]["total_ms"] = clock.ms();
    return report;
}

struct UniformityArgs {
    std::string graph;
    std::size_t cap = 4;
    unsigned threads = 1;
    std::uint64_t budget = UniformityOptions{}.budget;
};

inline RunReport cmd_uniformity(const UniformityArgs &args) {
    detail::Stopwatch clock;
    Json inputs{{"graph", args.graph}, {"cap", args.cap}, {"budget", args.budget}};
    Graph g = parse_graph_spec(args.graph);
    RunReport report{detail::base_report("uniformity", inputs), kExitPass};
    report.json["results"] = uniformity_to_json(uniformity(g, args.cap, {args.budget, args.threads}), args.cap);
    report.json["results"]["n"] = g.num_vertices();
    report.json["timings"]["total_ms"] = clock.ms();
    return report;
}

struct SimulateArgs {
    std::string protocol;
    std::string graph;
    std::string code;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::optional<std::string> forced_outcomes;
    std::string schedule = "interleaved";
    std::string recovery = "measure";
    std::size_t which = 0;
    std::optional<std::string> u;
    std::optional<std::string> dump_amplitudes;
    bool allow_large = false;
};

inline RunReport cmd_simulate(const SimulateArgs &args) {
    detail::Stopwatch clock;
    static constexpr double kFidelityTolerance = 1e-9;
    Json inputs{{"protocol", args.protocol}, {"graph", args.graph}, {"code", args.code},
                {"trials", args.trials}, {"schedule", args.schedule}, {"recovery", args.recovery}};
    if (args.forced_outcomes) inputs["forced_outcomes"] = *args.forced_outcomes;
    if (args.protocol == "partial") inputs["which"] = args.which;
    if (args.u) inputs["u"] = *args.u;
    CwsCode code(parse_graph_spec(args.graph), parse_code_spec(args.code));
    const Graph &g = code.graph();
    const F2Matrix &a = code.tent_pegs();
    std::size_t n = code.n();
    std::size_t k = code.k();
    if (k == 0) fail(ErrorCode::InvalidArgument, "simulation needs a code with k >= 1");

    ProtocolOptions base;
    base.seed = args.seed;
    base.limits.allow_large = args.allow_large;
    if (args.schedule == "interleaved") {
        base.schedule = CorrectionSchedule::interleaved;
    } else if (args.schedule == "deferred") {
        base.schedule = CorrectionSchedule::deferred;
    } else {
        fail(ErrorCode::ParseError, "schedule must be 'interleaved' or 'deferred'");
    }
    if (args.recovery == "measure") {
        base.recovery = RecoveryMode::measure_and_correct;
    } else if (args.recovery == "projector") {
        base.recovery = RecoveryMode::projector;
    } else {
        fail(ErrorCode::ParseError, "recovery must be 'measure' or 'projector'");
    }
    std::vector<int> forced;
    if (args.forced_outcomes) forced = parse_outcome_bits(*args.forced_outcomes);
    auto take_forced = [&](std::size_t begin, std::size_t count) -> std::optional<std::vector<int>> {
        if (!args.forced_outcomes || begin >= forced.size()) return std::nullopt;
        std::size_t end = std::min(forced.size(), begin + count);
        return std::vector<int>(forced.begin() + static_cast<std::ptrdiff_t>(begin),
                                forced.begin() + static_cast<std::ptrdiff_t>(end));
    };

    RunReport report{detail::base_report("simulate", inputs), kExitPass};
    report.json["seed"] = args.seed;
    auto &res = report.json["results"];
    res["n"] = n;
    res["k"] = k;
    res["tent_pegs"] = Json::array();
    for (const auto &row : a.row_list()) res["tent_pegs"].push_back(row.to_string());

    StateVector graph_state = prepare_graph_state(g, base.limits);
    double min_fidelity = 1;
    double min_residual = 1;
    Json transcripts = Json::array();
    std::optional<StateVector> last_state;
    std::size_t trials = std::max<std::size_t>(1, args.trials);
    for (std::size_t t = 0; t < trials; t++) {
        std::uint64_t trial_seed = args.seed + t;
        std::mt19937_64 rng(trial_seed);
        ProtocolOptions opts = base;
        opts.seed = trial_seed;
        opts.forced_outcomes = take_forced(0, k);
        Json trial{{"seed", trial_seed}};
        if (args.protocol == "encode") {
            auto logical = random_state(k, rng);
            auto enc = encode(g, a, logical, opts);
            double f = fidelity(enc.state, code_state(graph_state, a, logical));
            min_fidelity = std::min(min_fidelity, f);
            trial["encode"] = transcript_to_json(enc.transcript);
            last_state = enc.state;
        } else if (args.protocol == "roundtrip") {
            auto logical = random_state(k, rng);
            auto enc = encode(g, a, logical, opts);
            ProtocolOptions ropts = opts;
            ropts.forced_outcomes = take_forced(k, n);
            auto rec = recover(enc.state, g, a, ropts);
            min_fidelity = std::min(min_fidelity, fidelity(rec.logical, logical));
            min_residual = std::min(min_residual, fidelity(rec.physical, graph_state));
            trial["encode"] = transcript_to_json(enc.transcript);
            trial["recover"] = transcript_to_json(rec.transcript);
            last_state = rec.logical;
        } else if (args.protocol == "partial") {
            if (k < 2) fail(ErrorCode::InvalidArgument, "partial recovery needs k >= 2");
            if (args.which >= k) fail(ErrorCode::IndexOutOfRange, "--which outside [0, k)");
            std::vector<StateVector> qubits;
            for (std::size_t q = 0; q < k; q++) qubits.push_back(random_state(1, rng));
            StateVector logical = qubits[0];
            for (std::size_t q = 1; q < k; q++) logical = StateVector::tensor(logical, qubits[q]);
            auto enc = encode(g, a, logical, opts);
            ProtocolOptions popts = opts;
            popts.forced_outcomes = take_forced(k, 1);
            auto part = partial_recover(enc.state, g, a, args.which, popts);
            min_fidelity = std::min(min_fidelity, fidelity(part.qubit, qubits[args.which]));
            F2Matrix rest(0, n);
            StateVector rest_payload;
            bool first = true;
            for (std::size_t q = 0; q < k; q++) {
                if (q == args.which) continue;
                rest.append_row(a.row(q));
                rest_payload = first ? qubits[q] : StateVector::tensor(rest_payload, qubits[q]);
                first = false;
            }
            min_residual = std::min(min_residual, fidelity(part.residual, code_state(graph_state, rest, rest_payload)));
            trial["encode"] = transcript_to_json(enc.transcript);
            trial["partial"] = transcript_to_json(part.transcript);
            last_state = part.residual;
        } else if (args.protocol == "controlled-u") {
            if (k != 1) fail(ErrorCode::InvalidArgument, "controlled-U recovery needs k = 1");
            if (!args.u) fail(ErrorCode::ParseError, "controlled-u needs --u");
            auto u = PauliWord::from_letters(*args.u);
            auto logical = random_state(1, rng);
            auto enc = encode(g, a, logical, opts);
            ProtocolOptions copts = opts;
            copts.forced_outcomes = take_forced(k, n);
            auto rec = recover_controlled_u(enc.state, g, a.row(0), u, copts);
            min_fidelity = std::min(min_fidelity, fidelity(rec.qubit, logical));
            res["interactions"] = rec.interactions;
            trial["encode"] = transcript_to_json(enc.transcript);
            trial["recover"] = transcript_to_json(rec.transcript);
            last_state = rec.qubit;
        } else {
            fail(ErrorCode::ParseError, "protocol must be encode, roundtrip, partial or controlled-u");
        }
        transcripts.push_back(std::move(trial));
    }
    res["min_fidelity"] = min_fidelity;
    if (args.protocol == "roundtrip") res["min_graph_state_fidelity"] = min_residual;
    if (args.protocol == "partial") res["min_residual_fidelity"] = min_residual;
    bool ok = min_fidelity >= 1 - kFidelityTolerance && min_residual >= 1 - kFidelityTolerance;
    res["verdict"] = ok ? "pass" : "violation";
    res["transcripts"] = std::move(transcripts);
    if (!ok) report.exit_code = kExitViolation;
    if (args.dump_amplitudes && last_state) {
        if (last_state->num_qubits() > 12) fail(ErrorCode::TooManyQubits, "amplitude dumps are limited to 12 qubits");
        std::ofstream out(*args.dump_amplitudes);
        if (!out) fail(ErrorCode::ParseError, "cannot write '" + *args.dump_amplitudes + "'");
        out << amplitudes_csv(*last_state);
        res["amplitudes_file"] = *args.dump_amplitudes;
    }
    report.json["timings"]["total_ms"] = clock.ms();
    return report;
}

struct ReportArgs {
    std::string kind;
    std::uint64_t n = 0, k = 0, d = 0;
    unsigned lattice_dim = 1;
    std::uint64_t side = 64;
    unsigned r = 2;
};

inline RunReport cmd_report(const ReportArgs &args) {
    detail::Stopwatch clock;
    Json inputs{{"kind", args.kind}};
    RunReport report{detail::base_report("report", Json::object()), kExitPass};
    auto &res = report.json["results"];
    if (args.kind == "hamming") {
        inputs.update(Json{{"n", args.n}, {"k", args.k}, {"d", args.d}});
        auto hb = hamming_bound_Q(args.n, args.k, args.d);
        res["Q"] = hb.q.str();
        res["Q_decimal"] = static_cast<double>(hb.q);
        res["satisfied"] = hb.satisfied;
    } else if (args.kind == "gv") {
        inputs.update(Json{{"D", args.lattice_dim}, {"side", args.side}});
        auto p = gv_parameters(args.lattice_dim, args.side);
        res["length"] = p.length.str();
        res["log_term"] = p.log_term.str();
        res["distance"] = p.distance;
        res["feasible"] = p.feasible;
        res["dimension"] = p.feasible ? Json(p.dimension.str()) : Json("Infeasible");
    } else if (args.kind == "alpha") {
        inputs["r"] = args.r;
        auto alpha = find_primitive_mod3(make_field(2 * args.r));
        res["alpha"] = field_element_to_json(alpha);
        res["log_alpha"] = alpha.dlog();
        res["log_one_plus_alpha_base_alpha"] = alpha.field().log_base(alpha.value(), alpha.value() ^ 1);
    } else {
        fail(ErrorCode::ParseError, "report kind must be hamming, gv or alpha");
    }
    report.json["inputs"] = inputs;
    report.json["timings"]["total_ms"] = clock.ms();
    return report;
}

inline int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::BudgetExceeded:
        case ErrorCode::CapTooLargeForBudget:
            return kExitBudget;
        default:
            return kExitUsage;
    }
}

/// Parses argv, runs one subcommand and prints its report as JSON.
inline int run_cli(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    CLI::App app{"Graph-state CWS code construction, verification and simulation", "cwsgraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    std::optional<std::string> report_file;
    app.add_option("--report", report_file, "Also write the report to this file");
    unsigned threads = env_threads();

    ConstructArgs ca;
    auto *construct = app.add_subcommand("construct", "Build a tent-peg code and report its parameters");
    construct->add_option("--cr", ca.cr, "Cyclic code of length 2^(2r)-1");
    construct->add_option("--cu", ca.cu, "Two-dimensional cyclic code of length (2^(4r)-1)^2");
    construct->add_option("--repetition", ca.repetition, "Repetition code of length n");
    construct->add_option("--spec", ca.spec, "Code shortcut or JSON file");
    construct->add_option("--alpha", ca.alpha, "Primitive element, e.g. 0x2");
    construct->add_option("--out", ca.out, "Write the code file here");
    construct->add_option("--w-max", ca.w_max, "Largest weight for the low-weight search")->check(CLI::Range(1, 8));
    construct->add_option("--budget", ca.budget, "Meet-in-the-middle work budget");

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Certify pure distance m+1 by exhaustive search");
    verify->add_option("--graph", va.graph, "Graph shortcut or JSON file")->required();
    verify->add_option("--code", va.code, "Code shortcut or JSON file")->required();
    verify->add_option("--m", va.m, "Largest error weight checked");
    verify->add_option("--threads", threads, "Worker threads (default: CWSGRAPH_THREADS or 1)");
    verify->add_option("--budget", va.budget, "Maximum candidate errors");
    verify->add_option("--d-classical", va.d_classical, "Classical distance for the regular-graph sufficient check");
    verify->add_flag("--pure-z", va.pure_z, "Scan Z errors only");
    verify->add_flag("--skip-uniformity", va.skip_uniformity, "Do not compute the graph uniformity");
    verify->add_option("--uniformity-budget", va.uniformity_budget, "Maximum subsets for the uniformity check");

    UniformityArgs ua;
    auto *unif = app.add_subcommand("uniformity", "Uniformity of a graph state");
    unif->add_option("--graph", ua.graph, "Graph shortcut or JSON file")->required();
    unif->add_option("--cap", ua.cap, "Largest subset size enumerated");
    unif->add_option("--threads", threads, "Worker threads (default: CWSGRAPH_THREADS or 1)");
    unif->add_option("--budget", ua.budget, "Maximum subsets examined");

    SimulateArgs sa;
    auto *sim = app.add_subcommand("simulate", "Run an encoding or recovery protocol on a state vector");
    sim->add_option("protocol", sa.protocol, "encode | roundtrip | partial | controlled-u")
        ->required()
        ->check(CLI::IsMember({"encode", "roundtrip", "partial", "controlled-u"}));
    sim->add_option("--graph", sa.graph, "Graph shortcut or JSON file")->required();
    sim->add_option("--code", sa.code, "Code shortcut or JSON file")->required();
    sim->add_option("--seed", sa.seed, "Seed for states and outcomes");
    sim->add_option("--trials", sa.trials, "Number of random trials");
    sim->add_option("--forced-outcomes", sa.forced_outcomes, "Measurement outcomes, e.g. 101");
    sim->add_option("--schedule", sa.schedule, "interleaved | deferred");
    sim->add_option("--recovery", sa.recovery, "measure | projector");
    sim->add_option("--which", sa.which, "Logical qubit for partial recovery (0-based)");
    sim->add_option("--u", sa.u, "Pauli word U for controlled-U recovery, e.g. XZIIZ");
    sim->add_option("--dump-amplitudes", sa.dump_amplitudes, "CSV of the last output state (<= 12 qubits)");
    sim->add_flag("--allow-large", sa.allow_large, "Allow joint registers above 20 qubits");

    ReportArgs ra;
    auto *rep = app.add_subcommand("report", "Parameter calculators");
    rep->require_subcommand(1);
    auto *ham = rep->add_subcommand("hamming", "Quantum Hamming bound ratio Q");
    ham->add_option("--n", ra.n)->required();
    ham->add_option("--k", ra.k)->required();
    ham->add_option("--d", ra.d)->required();
    auto *gv = rep->add_subcommand("gv", "Lattice code parameters from the GV argument");
    gv->add_option("--D", ra.lattice_dim, "Lattice dimension")->required();
    gv->add_option("--side", ra.side, "Side length n")->required();
    auto *alpha = rep->add_subcommand("alpha", "Primitive element search for the cyclic construction");
    alpha->add_option("--r", ra.r)->required()->check(CLI::Range(2, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        RunReport report;
        if (*construct) {
            report = cmd_construct(ca);
        } else if (*verify) {
            va.threads = threads;
            report = cmd_verify(va);
        } else if (*unif) {
            ua.threads = threads;
            report = cmd_uniformity(ua);
        } else if (*sim) {
            report = cmd_simulate(sa);
        } else {
            ra.kind = *ham ? "hamming" : *gv ? "gv" : "alpha";
            report = cmd_report(ra);
        }
        out << report.json.dump(2) << "\n";
        if (report_file) write_json_file(*report_file, report.json);
        return report.exit_code;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace cwsgraph

#endif

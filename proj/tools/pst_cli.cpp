// Copyright 2026 The pst Authors
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

// pst: command-line front end for the threshold analyses.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pst/pst.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

/// Collects output and writes it once, to a file or stdout.
class Sink {
  public:
    explicit Sink(std::string path) : path_(std::move(path)) {}
    std::ostream &out() { return buf_; }
    void flush() {
        if (path_.empty() || path_ == "-") {
            std::cout << buf_.str();
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) {
            throw pst::InputError("cannot open output file '" + path_ + "'");
        }
        f << buf_.str();
    }

  private:
    std::string path_;
    std::ostringstream buf_;
};

json envelope(const std::string &command, json params) {
    json j;
    j["tool"] = "pst";
    j["version"] = std::string(pst::kVersion);
    j["command"] = command;
    j["params"] = std::move(params);
    return j;
}

void csv_preamble(std::ostream &o, const std::string &command, const json &params) {
    o << "# pst " << pst::kVersion << ' ' << command << '\n';
    o << "# params:";
    for (const auto &[k, v] : params.items()) {
        o << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    o << '\n';
}

json threshold_json(const pst::ThresholdResult &r) {
    return {{"value", r.value},
            {"method", std::string(pst::to_string(r.method))},
            {"residual", r.residual},
            {"bracket", {r.bracket.lo, r.bracket.hi}}};
}

json edge_json(const pst::EdgeErrorModel &m) {
    json j;
    for (auto c : pst::kEdgeComponents) {
        j[std::string(pst::to_string(c))] = m[c];
    }
    j["nu"] = m.nu();
    j["mu"] = m.mu();
    return j;
}

std::vector<double> parse_list(const std::string &text, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error &) {
            throw pst::InputError(std::string("bad number '") + item + "' in " + what);
        }
    }
    return out;
}

// ---- bounds ----

struct BoundsArgs {
    double eps = 0.01;
    std::uint64_t locations = 10;
    std::uint64_t min_weight = 2;
    bool postselected = false;
    bool coherent = false;
    std::string enumerator;
};

void run_bounds(const BoundsArgs &a, Sink &sink) {
    const auto kind = a.coherent ? pst::NoiseKind::general : pst::NoiseKind::stochastic;
    const auto profile = pst::GateNoiseProfile::iid(a.eps, a.locations, kind);
    pst::FaultySetSpec spec{a.min_weight, {}};
    for (double v : parse_list(a.enumerator, "--enumerator")) {
        spec.enumerator.push_back(v);
    }
    const auto rep = a.postselected ? pst::postselected_error_bound(profile, spec) : pst::standard_error_bound(profile, spec);
    json params{{"eps", a.eps},
                {"locations", a.locations},
                {"min_weight", a.min_weight},
                {"postselected", a.postselected},
                {"noise", std::string(pst::to_string(kind))}};
    if (!spec.enumerator.empty()) {
        params["enumerator"] = spec.enumerator;
    }
    auto j = envelope("bounds", params);
    j["value"] = rep.value;
    j["regime"] = std::string(pst::to_string(rep.regime));
    j["postselection_probability_lower_bound"] = pst::postselection_prob_lower_bound(profile);
    sink.out() << j.dump(2) << '\n';
}

// ---- concat ----

struct ConcatArgs {
    std::uint64_t gates = 100;
    std::uint64_t distance = 3;
    std::uint64_t levels = 3;
    double eps0 = 1e-3;
    std::string format = "csv";
};

void run_concat(const ConcatArgs &a, Sink &sink) {
    const pst::ConcatenationScheme scheme(a.gates, a.distance, a.levels);
    const json params{{"gates", a.gates}, {"distance", a.distance}, {"levels", a.levels}, {"eps0", a.eps0}};
    struct ModeOut {
        pst::ConcatMode mode;
        std::vector<double> eps;
        pst::ConcatThreshold th;
    };
    std::vector<ModeOut> modes;
    for (auto m : {pst::ConcatMode::correction, pst::ConcatMode::detection}) {
        modes.push_back({m, pst::iterate_levels(a.eps0, scheme, m), pst::threshold_estimate(scheme, m)});
    }
    std::optional<double> gain;
    if (a.gates >= 10) {
        gain = pst::supremacy_gain(a.gates);
    }
    if (a.format == "json") {
        auto j = envelope("concat", params);
        j["correctable"] = scheme.correctable();
        for (const auto &m : modes) {
            json mj;
            mj["levels"] = m.eps;
            mj["threshold_rough"] = m.th.rough ? json(*m.th.rough) : json(nullptr);
            mj["threshold_rough_asymptotic"] = m.th.rough_asymptotic ? json(*m.th.rough_asymptotic) : json(nullptr);
            mj["threshold_exact"] = m.th.exact ? threshold_json(*m.th.exact) : json(nullptr);
            j[std::string(pst::to_string(m.mode))] = mj;
        }
        j["supremacy_gain"] = gain ? json(*gain) : json(nullptr);
        sink.out() << j.dump(2) << '\n';
        return;
    }
    auto &o = sink.out();
    csv_preamble(o, "concat", params);
    o << "quantity,mode,level,value\n";
    for (const auto &m : modes) {
        const std::string mode(pst::to_string(m.mode));
        for (std::size_t l = 0; l < m.eps.size(); ++l) {
            o << "eps," << mode << ',' << l << ',' << num(m.eps[l]) << '\n';
        }
        auto opt = [&](const char *name, const std::optional<double> &v) {
            o << name << ',' << mode << ",," << (v ? num(*v) : std::string("none")) << '\n';
        };
        opt("threshold_rough", m.th.rough);
        opt("threshold_rough_asymptotic", m.th.rough_asymptotic);
        opt("threshold_exact", m.th.exact ? std::optional<double>(m.th.exact->value) : std::nullopt);
    }
    if (gain) {
        o << "supremacy_gain,,," << num(*gain) << '\n';
    }
}

// ---- saw ----

struct SawArgs {
    std::uint64_t max_length = 12;
    bool naive = false;
    std::string format = "csv";
    std::optional<double> eps;
    std::uint64_t distance = 1;
    double poly = 1.0;
    std::string singular_counts;
};

void run_saw(const SawArgs &a, Sink &sink) {
    const auto table = a.naive ? pst::count_saws_reference(a.max_length) : pst::count_saws(a.max_length);
    json params{{"max_length", a.max_length}, {"enumerator", a.naive ? "reference" : "optimized"}};
    if (a.eps) {
        params["eps"] = *a.eps;
        params["distance"] = a.distance;
        params["poly"] = a.poly;
    }
    if (!a.singular_counts.empty()) {
        params["singular_counts"] = a.singular_counts;
    }
    if (a.format == "json") {
        const auto rep = pst::verify_saw_bound(table);
        auto j = envelope("saw", params);
        j["counts"] = table.counts;
        j["bound"] = {{"holds", rep.holds},
                      {"max_ratio", rep.max_ratio},
                      {"max_ratio_length", rep.max_ratio_length},
                      {"first_violation", rep.first_violation ? json(*rep.first_violation) : json(nullptr)}};
        if (a.eps) {
            const auto tail = pst::topological_tail(*a.eps, a.distance, a.poly, table);
            j["topological_tail"] = {{"partial", tail.partial}, {"closure", tail.closure}, {"total", tail.total()}};
            if (!a.singular_counts.empty()) {
                std::ifstream in(a.singular_counts);
                if (!in) {
                    throw pst::InputError("cannot read '" + a.singular_counts + "'");
                }
                j["singular_tail"] = pst::singular_tail(*a.eps, a.distance, pst::read_singular_counts(in));
            }
        }
        sink.out() << j.dump(2) << '\n';
        return;
    }
    auto &o = sink.out();
    csv_preamble(o, "saw", params);
    o << "l,count\n";
    for (std::size_t l = 1; l < table.counts.size(); ++l) {
        o << l << ',' << table.counts[l] << '\n';
    }
}

// ---- phenom / circuit ----

struct PhenomArgs {
    std::string method = "closed-form";
    double saw_ratio = pst::kSawRatioLimit;
    double singular_ratio = pst::kSingularCriticalRatio;
};

pst::SolveMethod parse_method(const std::string &m) {
    return m == "bisection" ? pst::SolveMethod::bisection : pst::SolveMethod::closed_form;
}

void run_phenom(const PhenomArgs &a, Sink &sink) {
    pst::CriticalConstants c;
    c.saw_ratio_limit = a.saw_ratio;
    c.singular_ratio_limit = a.singular_ratio;
    const auto t = pst::phenomenological_thresholds(c, parse_method(a.method));
    auto j = envelope("phenom", {{"method", a.method}, {"saw_ratio", a.saw_ratio}, {"singular_ratio", a.singular_ratio}});
    j["topological"] = t.topological.value;
    j["singular"] = t.singular.value;
    j["detail"] = {{"topological", threshold_json(t.topological)}, {"singular", threshold_json(t.singular)}};
    j["msd_threshold"] = c.msd_threshold;
    sink.out() << j.dump(2) << '\n';
}

pst::EdgeOrder parse_order(const std::string &o) {
    return o == "leading" ? pst::EdgeOrder::leading : pst::EdgeOrder::all_order;
}

struct CircuitArgs {
    std::string order = "leading";
    double singular_ratio = pst::kSingularCriticalRatio;
};

void run_circuit(const CircuitArgs &a, Sink &sink) {
    pst::CriticalConstants c;
    c.singular_ratio_limit = a.singular_ratio;
    const auto order = parse_order(a.order);
    const auto r = pst::circuit_threshold(order, c);
    auto j = envelope("circuit", {{"order", std::string(pst::to_string(order))}, {"singular_ratio", a.singular_ratio}});
    j["threshold"] = r.value;
    j["detail"] = threshold_json(r);
    j["edges_at_threshold"] = edge_json(pst::edge_model(r.value, order));
    j["effective_epsilon"] = pst::circuit_effective_epsilon(r.value, order);
    sink.out() << j.dump(2) << '\n';
}

// ---- fig2 ----

struct Fig2Args {
    std::optional<std::string> grid;
    double from = 0.005;
    double to = 0.04;
    double step = 0.005;
};

void run_fig2(const Fig2Args &a, Sink &sink) {
    std::vector<double> grid;
    json params;
    if (a.grid) {
        grid = parse_list(*a.grid, "--grid");
        params["grid"] = *a.grid;
    } else {
        if (!(a.step > 0) || a.to < a.from) {
            throw pst::DomainError("fig2: need step > 0 and to >= from");
        }
        for (int i = 0;; ++i) {
            const double pe = a.from + a.step * i;
            if (pe > a.to + 1e-12) {
                break;
            }
            grid.push_back(pe);
        }
        params = {{"from", a.from}, {"to", a.to}, {"step", a.step}};
    }
    for (double pe : grid) {
        if (!(pe >= 0 && pe <= 0.05)) {
            throw pst::DomainError("fig2: grid point " + num(pe) + " outside [0, 0.05]");
        }
    }
    auto &o = sink.out();
    csv_preamble(o, "fig2", params);
    o << "p_e,q1_lead,q1_all,q3_lead,q3_all,q12_lead,q12_all,q23_lead,q23_all,eps_lead,eps_all,ratio_limit\n";
    for (double pe : grid) {
        const auto r = pst::edge_sweep_row(pe);
        o << num(pe) << ',' << num(r.leading.q1) << ',' << num(r.all_order.q1) << ',' << num(r.leading.q3) << ','
          << num(r.all_order.q3) << ',' << num(r.leading.q12) << ',' << num(r.all_order.q12) << ','
          << num(r.leading.q23) << ',' << num(r.all_order.q23) << ',' << num(r.eps_leading) << ','
          << num(r.eps_all_order) << ',' << num(pst::kSingularCriticalRatio) << '\n';
    }
}

// ---- edges ----

struct EdgesArgs {
    std::optional<double> pe;
    std::optional<double> p1, p2, pp, pm;
    std::string config;
    std::string order = "both";
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

void apply_config(EdgesArgs &a) {
    if (a.config.empty()) {
        return;
    }
    std::ifstream in(a.config);
    if (!in) {
        throw pst::InputError("cannot read config '" + a.config + "'");
    }
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) {
            line.resize(h);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw pst::InputError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto number = [&] {
            const auto v = parse_list(value, "config");
            if (v.size() != 1) {
                throw pst::InputError("config line " + std::to_string(line_no) + ": expected one number");
            }
            return v[0];
        };
        // Flags given on the command line win over the file.
        if (key == "pe") {
            a.pe = a.pe.value_or(number());
        } else if (key == "p1") {
            a.p1 = a.p1.value_or(number());
        } else if (key == "p2") {
            a.p2 = a.p2.value_or(number());
        } else if (key == "pp") {
            a.pp = a.pp.value_or(number());
        } else if (key == "pm") {
            a.pm = a.pm.value_or(number());
        } else if (key == "samples") {
            a.samples = a.samples ? a.samples : static_cast<std::uint64_t>(number());
        } else if (key == "seed") {
            a.seed = a.seed.value_or(static_cast<std::uint64_t>(number()));
        } else {
            throw pst::InputError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
}

void run_edges(EdgesArgs a, Sink &sink) {
    apply_config(a);
    const double base = a.pe.value_or(0.01);
    const pst::CircuitNoiseParams params{a.p1.value_or(base), a.p2.value_or(base), a.pp.value_or(base), a.pm.value_or(base)};
    params.validate();
    std::vector<std::pair<std::string, pst::EdgeErrorModel>> rows;
    if (a.order == "leading" || a.order == "both") {
        rows.emplace_back("leading", pst::leading_order_edge_model(params));
    }
    if (a.order == "all-order" || a.order == "both") {
        rows.emplace_back("all-order", pst::all_order_edge_model(params));
    }
    std::optional<pst::SampledEdgeModel> sampled;
    if (a.samples > 0) {
        sampled = pst::sample_location_model(params, a.samples, a.seed.value_or(1));
        rows.emplace_back("sampled", sampled->estimate);
    }
    json pj{{"p1", params.p1}, {"p2", params.p2}, {"pp", params.pp}, {"pm", params.pm}, {"order", a.order}};
    if (a.samples > 0) {
        pj["samples"] = a.samples;
        pj["seed"] = a.seed.value_or(1);
    }
    const bool uniform = params.p1 == params.p2 && params.p2 == params.pp && params.pp == params.pm;
    if (a.format == "csv") {
        auto &o = sink.out();
        csv_preamble(o, "edges", pj);
        o << "p_e,q1,q2,q3,q12,q23,q31,order\n";
        for (const auto &[name, m] : rows) {
            o << (uniform ? num(params.p1) : std::string("")) << ',' << num(m.q1) << ',' << num(m.q2) << ','
              << num(m.q3) << ',' << num(m.q12) << ',' << num(m.q23) << ',' << num(m.q31) << ',' << name << '\n';
        }
        return;
    }
    auto j = envelope("edges", pj);
    for (const auto &[name, m] : rows) {
        j[name] = edge_json(m);
    }
    if (sampled) {
        j["sampled_standard_error"] = edge_json(sampled->standard_error);
    }
    sink.out() << j.dump(2) << '\n';
}

// ---- validate ----

struct ValidateArgs {
    std::string circuit = "d2patch";
    std::string netlist;
    double pe = 1e-3;
    std::optional<double> p1, p2, pp, pm;
    std::string cutoff = "auto";
    std::optional<std::uint64_t> min_weight;
    std::uint64_t search_weight = 3;
};

json dist_json(const std::map<std::uint64_t, double> &d) {
    json j = json::array();
    for (const auto &[k, p] : d) {
        j.push_back({{"outcome", k}, {"probability", p}});
    }
    return j;
}

void run_validate(const ValidateArgs &a, Sink &sink) {
    using namespace pst::postsel;
    std::optional<CliffordCircuit> circuit;
    json params;
    if (!a.netlist.empty()) {
        std::ifstream in(a.netlist);
        if (!in) {
            throw pst::InputError("cannot read netlist '" + a.netlist + "'");
        }
        circuit = parse_netlist(in);
        params["netlist"] = a.netlist;
    } else {
        circuit = builtin::by_name(a.circuit);
        params["circuit"] = a.circuit;
    }
    const pst::CircuitNoiseParams np{a.p1.value_or(a.pe), a.p2.value_or(a.pe), a.pp.value_or(a.pe), a.pm.value_or(a.pe)};
    const auto noise = depolarizing_noise(*circuit, np);
    params["p1"] = np.p1;
    params["p2"] = np.p2;
    params["pp"] = np.pp;
    params["pm"] = np.pm;
    params["cutoff"] = a.cutoff;

    std::uint64_t w = 0;
    if (a.min_weight) {
        w = *a.min_weight;
        params["min_weight"] = w;
    } else {
        auto found = minimal_faulty_weight(*circuit, noise, a.search_weight);
        if (!found) {
            throw pst::DomainError("no faulty path up to weight " + std::to_string(a.search_weight) +
                                   "; pass --min-weight explicitly");
        }
        w = *found;
        params["min_weight"] = "search";
        params["search_weight"] = a.search_weight;
    }

    std::optional<std::size_t> cutoff;
    if (a.cutoff == "auto") {
        cutoff = auto_cutoff(*circuit, noise);
    } else if (a.cutoff != "none") {
        const auto v = parse_list(a.cutoff, "--cutoff");
        if (v.size() != 1 || v[0] < 0 || v[0] != static_cast<double>(static_cast<std::size_t>(v[0]))) {
            throw pst::InputError("--cutoff takes auto, none or a nonnegative integer");
        }
        cutoff = static_cast<std::size_t>(v[0]);
    }
    const auto sim = exact_distributions(*circuit, noise, cutoff);
    const auto th = verify_theorem1(*circuit, noise, {w, {}});

    auto j = envelope("validate", params);
    j["qubits"] = circuit->num_qubits();
    j["locations"] = th.locations;
    j["ports"] = {{"nx", sim.nx}, {"ny", sim.ny}, {"nz", sim.nz}};
    j["min_weight"] = w;
    j["q_accept"] = sim.q_accept;
    j["conditional_defined"] = sim.conditional_defined;
    j["delta"] = sim.conditional_defined ? json(sim.delta) : json(nullptr);
    j["delta_upper"] = sim.conditional_defined ? json(sim.delta_upper) : json(nullptr);
    j["sparse_mass"] = sim.sparse_mass();
    j["rejected_mass"] = sim.rejected_mass;
    j["benign_mass"] = sim.benign_mass;
    j["faulty_mass"] = sim.faulty_mass;
    j["beta"] = sim.beta();
    j["covered_mass"] = sim.covered_mass;
    j["paths"] = sim.paths;
    j["cutoff"] = sim.cutoff ? json(*sim.cutoff) : json(nullptr);
    j["truncation_bound"] = sim.truncation_bound;
    j["ideal"] = dist_json(sim.ideal);
    j["conditional"] = dist_json(sim.conditional);
    json joint = json::array();
    for (const auto &[k, p] : sim.joint) {
        joint.push_back({{"xy", k.first}, {"z", k.second}, {"probability", p}});
    }
    j["joint"] = joint;
    j["bound_check"] = {{"pass", th.pass},
                    {"precondition_ok", th.precondition_ok},
                    {"offending_path", th.offending_description.empty() ? json(nullptr) : json(th.offending_description)},
                    {"delta", th.delta},
                    {"bound", th.bound},
                    {"delta_slack", th.delta_slack()},
                    {"q_accept", th.q_accept},
                    {"q_lower_bound", th.q_lower_bound},
                    {"q_slack", th.q_slack()}};
    sink.out() << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"pst: thresholds and error bounds for postselected quantum circuits", "pst"};
    app.set_version_flag("--version", std::string("pst ") + pst::kVersion);
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "write to this file instead of stdout");
    app.fallthrough();

    BoundsArgs ba;
    auto *bounds = app.add_subcommand("bounds", "standard or postselected error bound for i.i.d. noise");
    bounds->add_option("--eps", ba.eps, "noise strength per location")->capture_default_str();
    bounds->add_option("--locations", ba.locations, "number of noisy locations S")->capture_default_str();
    bounds->add_option("--min-weight", ba.min_weight, "smallest faulty path weight w")->capture_default_str();
    bounds->add_flag("--postselected", ba.postselected, "postselected bound instead of the standard one");
    bounds->add_flag("--coherent", ba.coherent, "declare the noise general (non-stochastic)");
    bounds->add_option("--enumerator", ba.enumerator, "comma-separated faulty-path counts a_0,a_1,...");

    ConcatArgs ca;
    auto *concat = app.add_subcommand("concat", "concatenated-code level recursion");
    concat->add_option("--gates", ca.gates, "gates per level M")->capture_default_str();
    concat->add_option("--distance", ca.distance, "code distance d")->capture_default_str();
    concat->add_option("--levels", ca.levels, "levels L")->capture_default_str();
    concat->add_option("--eps0", ca.eps0, "physical error rate")->capture_default_str();
    concat->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    SawArgs sa;
    auto *saw = app.add_subcommand("saw", "self-avoiding walk counts on the cubic lattice");
    saw->add_option("--max-length", sa.max_length, "longest walk")->capture_default_str();
    saw->add_flag("--naive", sa.naive, "use the unreduced reference enumerator");
    saw->add_option("--format", sa.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    saw->add_option("--eps", sa.eps, "edge rate for the tail sums (json)");
    saw->add_option("--distance", sa.distance, "chain length cut d for the tail sums")->capture_default_str();
    saw->add_option("--poly", sa.poly, "prefactor of the topological tail")->capture_default_str();
    saw->add_option("--singular-counts", sa.singular_counts, "CSV file with l,count rows");

    PhenomArgs pa;
    auto *phenom = app.add_subcommand("phenom", "phenomenological thresholds");
    phenom->add_option("--method", pa.method)->check(CLI::IsMember({"closed-form", "bisection"}))->capture_default_str();
    phenom->add_option("--saw-ratio", pa.saw_ratio)->capture_default_str();
    phenom->add_option("--singular-ratio", pa.singular_ratio)->capture_default_str();

    CircuitArgs cia;
    auto *circuit = app.add_subcommand("circuit", "circuit-level threshold under uniform depolarizing noise");
    circuit->add_option("--order", cia.order)->check(CLI::IsMember({"leading", "all", "all-order"}))->capture_default_str();
    circuit->add_option("--singular-ratio", cia.singular_ratio)->capture_default_str();

    Fig2Args fa;
    auto *fig2 = app.add_subcommand("fig2", "edge rates versus p_e, both orders (CSV)");
    fig2->add_option("--grid", fa.grid, "comma-separated p_e values; empty for none");
    fig2->add_option("--from", fa.from)->capture_default_str();
    fig2->add_option("--to", fa.to)->capture_default_str();
    fig2->add_option("--step", fa.step)->capture_default_str();

    EdgesArgs ea;
    auto *edges = app.add_subcommand("edges", "edge error model for given circuit noise");
    edges->add_option("--pe", ea.pe, "uniform value for p1, p2, pp, pm");
    edges->add_option("--p1", ea.p1);
    edges->add_option("--p2", ea.p2);
    edges->add_option("--pp", ea.pp);
    edges->add_option("--pm", ea.pm);
    edges->add_option("--config", ea.config, "key=value file (pe, p1, p2, pp, pm, samples, seed)");
    edges->add_option("--order", ea.order)->check(CLI::IsMember({"leading", "all-order", "both"}))->capture_default_str();
    edges->add_option("--samples", ea.samples, "Monte Carlo samples (0 = none)")->capture_default_str();
    edges->add_option("--seed", ea.seed, "[1]");
    edges->add_option("--format", ea.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    ValidateArgs va;
    auto *validate = app.add_subcommand("validate", "exact postselection simulation of a small Clifford circuit");
    auto *by_name = validate->add_option("--circuit", va.circuit)
                        ->check(CLI::IsMember({"baseline", "parity", "d2patch"}))
                        ->capture_default_str();
    validate->add_option("--netlist", va.netlist, "circuit netlist file")->excludes(by_name);
    validate->add_option("--pe", va.pe, "uniform depolarizing strength")->capture_default_str();
    validate->add_option("--p1", va.p1);
    validate->add_option("--p2", va.p2);
    validate->add_option("--pp", va.pp);
    validate->add_option("--pm", va.pm);
    validate->add_option("--cutoff", va.cutoff, "auto, none, or a fault-weight cutoff")->capture_default_str();
    validate->add_option("--min-weight", va.min_weight, "faulty-set weight w (default: search)");
    validate->add_option("--search-weight", va.search_weight, "largest weight tried by the search")->capture_default_str();

    if (argc > 1 && argv[1][0] != '-') {
        bool known = false;
        for (const auto *sub : app.get_subcommands({})) {
            known = known || sub->get_name() == argv[1];
        }
        if (!known) {
            std::cerr << "pst: unknown subcommand '" << argv[1] << "'\n" << app.help();
            return kExitUsage;
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        if (code != 0) {
            std::cerr << app.help();
        }
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        Sink sink(output);
        if (*bounds) {
            run_bounds(ba, sink);
        } else if (*concat) {
            run_concat(ca, sink);
        } else if (*saw) {
            run_saw(sa, sink);
        } else if (*phenom) {
            run_phenom(pa, sink);
        } else if (*circuit) {
            run_circuit(cia, sink);
        } else if (*fig2) {
            run_fig2(fa, sink);
        } else if (*edges) {
            run_edges(ea, sink);
        } else if (*validate) {
            run_validate(va, sink);
        }
        sink.flush();
    } catch (const pst::DomainError &e) {
        std::cerr << "pst: domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pst::InputError &e) {
        std::cerr << "pst: input error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pst::ResourceError &e) {
        std::cerr << "pst: resource limit: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pst::UnsupportedCircuit &e) {
        std::cerr << "pst: unsupported circuit: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}

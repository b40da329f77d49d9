// Copyright 2026 The spectrakit Authors
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

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectrakit/characters.h"
#include "spectrakit/entanglement.h"
#include "spectrakit/errors.h"
#include "spectrakit/partition.h"
#include "spectrakit/qstate.h"
#include "spectrakit/schurweyl.h"
#include "spectrakit/serialize.h"
#include "spectrakit/spectra.h"

namespace {

using namespace spectrakit;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::optional<std::uint64_t> seed;
    double tolerance = 1e-8;
    CharacterCaps caps;
    std::string output;
    std::string format = "json";
};

std::uint64_t require_seed(const RunConfig &config) {
    if (!config.seed) {
        throw DomainError("this subcommand is randomized and needs an explicit --seed");
    }
    return *config.seed;
}

// Writes to --out when given, stdout otherwise.
void emit(const RunConfig &config, const std::string &text) {
    if (config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output, std::ios::binary);
    if (!out) {
        throw DomainError("cannot open " + config.output + " for writing");
    }
    out << text;
    if (!out) {
        throw DomainError("failed writing " + config.output);
    }
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw DomainError(path + ": " + e.what());
    }
}

DensityMatrix read_state(const std::string &path) {
    return density_from_json(read_json_file(path));
}

// Random channel on C^d: output dimension d, environment dimension drawn
// uniformly from 1..d.
ExtensionChannel sample_channel(int d, Rng &rng) {
    std::uniform_int_distribution<int> env(1, d);
    int e = env(rng);
    return ExtensionChannel::random(d, d, e, rng);
}

int half_integer_twice(double j, const char *name) {
    double twice = 2 * j;
    long rounded = std::lround(twice);
    if (j < 0 || std::abs(twice - static_cast<double>(rounded)) > 1e-12) {
        throw DomainError(std::string(name) + " must be a nonnegative half-integer");
    }
    return static_cast<int>(rounded);
}

std::string format_j(int twice) {
    return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
}

struct Args {
    std::string mu, nu, lam;
    int d = 0;
    int table = 0;
    double j1 = 0, j2 = 0;
    double a = 0, b = 0;
    std::vector<double> rab, spec, mu_real, nu_real, lam_real;
    std::string vertex;
    int k = 0;
    double eps = 0.1;
    std::string metric = "tv";
    std::string state;
    bool json = false;
    int env_dim = 0;
    int environment_dim = 0;
    int restarts = -1;
    int samples = 500;
    bool hadamard = false;
    double p = 0.5;
};

void run_dims(const Args &args, const RunConfig &config) {
    Partition lam = Partition::parse(args.lam);
    std::ostringstream out;
    out << "f=" << dim_symmetric(lam) << "\n";
    if (args.d > 0) {
        out << "t=" << dim_unitary(lam, args.d) << "\n";
    }
    emit(config, out.str());
}

void run_kron(const Args &args, const RunConfig &config) {
    if (args.table > 0) {
        const CharacterTable &table = shared_character_table(args.table, config.caps);
        emit(config, dump(to_json(table)));
        return;
    }
    if (args.mu.empty() || args.nu.empty() || args.lam.empty()) {
        throw DomainError("kron needs --mu, --nu and --lam (or --table K)");
    }
    BigInt g = kronecker(Partition::parse(args.mu), Partition::parse(args.nu),
                         Partition::parse(args.lam), config.caps);
    emit(config, to_string(g) + "\n");
}

void run_lr(const Args &args, const RunConfig &config) {
    BigInt c = littlewood_richardson(Partition::parse(args.mu), Partition::parse(args.nu),
                                     Partition::parse(args.lam));
    emit(config, to_string(c) + "\n");
}

void run_cg(const Args &args, const RunConfig &config) {
    std::vector<int> js = clebsch_gordan_su2(half_integer_twice(args.j1, "--j1"),
                                             half_integer_twice(args.j2, "--j2"));
    std::string line;
    for (std::size_t i = 0; i < js.size(); ++i) {
        line += (i ? " " : "") + format_j(js[i]);
    }
    emit(config, line + "\n");
}

void run_classical_h(const Args &args, const RunConfig &config) {
    auto h = classical_h(Partition::parse(args.mu), Partition::parse(args.nu));
    Json out = Json::array();
    // Largest frames first.
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        out.push_back(Json{{"lambda", to_json(it->first)}, {"h", to_string(it->second)}});
    }
    emit(config, dump(out));
}

void run_scan(const Args &args, const RunConfig &config) {
    std::vector<ScanCell> cells = kron_scan(Partition::parse(args.lam));
    std::ostringstream out;
    write_scan_csv(out, cells);
    emit(config, out.str());
}

void run_bravyi(const Args &args, const RunConfig &config) {
    if (!args.vertex.empty()) {
        DensityMatrix rho = bravyi_vertex_state(parse_bravyi_vertex(args.vertex), args.rab);
        emit(config, dump(to_json(rho)));
        return;
    }
    emit(config, dump(to_json(bravyi_check(args.a, args.b, args.rab))));
}

void run_estimate(const Args &args, const RunConfig &config) {
    if (args.metric != "tv" && args.metric != "l1") {
        throw DomainError("--metric must be tv or l1");
    }
    BallMetric metric = args.metric == "tv" ? BallMetric::TotalVariation : BallMetric::L1;
    DensityMatrix rho = DensityMatrix::diagonal({static_cast<int>(args.spec.size())}, args.spec);
    SpectrumDistribution dist = estimate_spectrum(rho, args.k, args.eps, metric);
    emit(config, dump(frames_to_json(dist)));
    if (!config.output.empty()) {
        std::cout << dump(summary_to_json(dist));
    }
}

void run_measures(const Args &args, const RunConfig &config) {
    DensityMatrix rho = read_state(args.state);
    Json j;
    j["dims"] = rho.dims();
    j["entropy"] = von_neumann_entropy(rho);
    Json parts = Json::array();
    for (int i = 0; i < rho.parts(); ++i) {
        parts.push_back(von_neumann_entropy(partial_trace(rho, {i})));
    }
    j["part_entropies"] = parts;
    if (rho.parts() == 2) {
        j["conditional_entropy"] = conditional_entropy(rho);
        j["mutual_information"] = mutual_information(rho);
        j["log_negativity"] = log_negativity(rho);
        if (rho.dims() == std::vector<int>{2, 2}) {
            j["concurrence"] = concurrence(rho);
            j["eof"] = eof_wootters(rho);
        }
    }
    if (rho.parts() == 3) {
        j["conditional_mutual_information"] = conditional_mutual_information(rho);
    }
    if (args.json) {
        emit(config, dump(j));
        return;
    }
    std::ostringstream out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key();
        for (std::size_t pad = it.key().size(); pad < 32; ++pad) {
            out << ' ';
        }
        if (it.value().is_array()) {
            for (std::size_t i = 0; i < it.value().size(); ++i) {
                const Json &x = it.value()[i];
                out << (i ? " " : "")
                    << (x.is_number_integer() ? std::to_string(x.get<int>())
                                              : format_double(x.get<double>()));
            }
        } else {
            out << format_double(it.value().get<double>());
        }
        out << "\n";
    }
    emit(config, out.str());
}

void run_squashed(const Args &args, const RunConfig &config) {
    SquashedOptions opts;
    opts.seed = require_seed(config);
    opts.env_dim = args.env_dim;
    opts.environment_dim = args.environment_dim;
    if (args.restarts >= 0) {
        opts.restarts = args.restarts;
    }
    opts.tolerance = config.tolerance;
    MeasureReport report = squashed_upper_bound(read_state(args.state), opts);
    emit(config, dump(to_json(report)));
}

void run_uncertainty(const Args &args, const RunConfig &config) {
    if (args.d < 2) {
        throw DomainError("--d must be at least 2");
    }
    if (args.samples < 1) {
        throw DomainError("--samples must be positive");
    }
    Rng rng(require_seed(config));
    MeasureReport worst;
    worst.kind = MeasureKind::Exact;
    double worst_gap = -std::numeric_limits<double>::infinity();
    bool holds = true;
    for (int s = 0; s < args.samples; ++s) {
        ExtensionChannel channel = sample_channel(args.d, rng);
        UncertaintyCheck check =
            channel_uncertainty_check(channel, args.d, args.hadamard, config.tolerance);
        double gap = check.chi0 + check.chi1 - check.mutual;
        holds = holds && check.holds;
        if (gap > worst_gap) {
            worst_gap = gap;
            worst.extension = channel;
        }
    }
    worst.value = worst_gap;
    Json j = to_json(worst);
    j["d"] = args.d;
    j["samples"] = args.samples;
    j["holds"] = holds;
    emit(config, dump(j));
}

void run_horn(const Args &args, const RunConfig &config) {
    HornOptions opts;
    opts.seed = require_seed(config);
    if (args.restarts >= 0) {
        opts.restarts = args.restarts;
    }
    HornResult result = horn_oracle(args.mu_real, args.nu_real, args.lam_real, args.p, opts);
    emit(config, dump(to_json(result)));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Representation-theoretic and quantum spectral toolkit", "spectrakit"};
    app.require_subcommand(1);
    RunConfig config;
    Args args;

    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--out", config.output, "Write the result to this file");
    };
    auto add_seed = [&](CLI::App *sub) {
        sub->add_option("--seed", config.seed, "RNG seed (required)")->required();
    };
    auto add_tolerance = [&](CLI::App *sub) {
        sub->add_option("--tol", config.tolerance, "Numerical tolerance")
            ->check(CLI::PositiveNumber);
    };

    auto *dims = app.add_subcommand("dims", "Dimensions f^lambda and t_lambda(d)");
    dims->add_option("--lam", args.lam, "Young frame, e.g. 3,2")->required();
    dims->add_option("--d", args.d, "Unitary group dimension")->check(CLI::PositiveNumber);
    add_output(dims);

    auto *kron = app.add_subcommand("kron", "Kronecker coefficient or character table");
    kron->add_option("--mu", args.mu);
    kron->add_option("--nu", args.nu);
    kron->add_option("--lam", args.lam);
    kron->add_option("--table", args.table, "Export the character table of S_K as JSON")
        ->check(CLI::PositiveNumber);
    add_output(kron);

    auto *lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr->add_option("--mu", args.mu)->required();
    lr->add_option("--nu", args.nu)->required();
    lr->add_option("--lam", args.lam)->required();
    add_output(lr);

    auto *cg = app.add_subcommand("cg", "SU(2) Clebsch-Gordan series");
    cg->add_option("--j1", args.j1)->required();
    cg->add_option("--j2", args.j2)->required();
    add_output(cg);

    auto *ch = app.add_subcommand("classical-h", "Classical coefficients h_{mu nu}^lambda");
    ch->add_option("--mu", args.mu)->required();
    ch->add_option("--nu", args.nu)->required();
    add_output(ch);

    auto *scan = app.add_subcommand("scan", "Kronecker scan over two-row frames (CSV)");
    scan->add_option("--lam", args.lam)->required();
    add_output(scan);

    auto *bravyi = app.add_subcommand("bravyi", "Two-qubit spectral inequalities");
    bravyi->add_option("--a", args.a, "Smaller eigenvalue of rho_A");
    bravyi->add_option("--b", args.b, "Smaller eigenvalue of rho_B");
    bravyi->add_option("--rab", args.rab, "Spectrum of rho_AB")->delimiter(',')->required();
    bravyi->add_option("--vertex", args.vertex, "Emit the vertex state A, B, C or D instead");
    add_output(bravyi);

    auto *estimate = app.add_subcommand("estimate", "Spectrum estimation distribution");
    estimate->add_option("--spec", args.spec, "Spectrum of the diagonal state")
        ->delimiter(',')
        ->required();
    estimate->add_option("--k", args.k, "Number of copies")->required()->check(CLI::PositiveNumber);
    estimate->add_option("--eps", args.eps, "Ball radius")->check(CLI::PositiveNumber);
    estimate->add_option("--metric", args.metric, "tv or l1");
    add_output(estimate);

    auto *measures = app.add_subcommand("measures", "Entropy and entanglement table of a state");
    measures->add_option("--state", args.state, "State JSON file")->required();
    measures->add_flag("--json", args.json, "Print JSON instead of a table");
    add_output(measures);

    auto *squashed = app.add_subcommand("squashed", "Upper bound on squashed entanglement");
    squashed->add_option("--state", args.state, "Bipartite state JSON file")->required();
    squashed->add_option("--env-dim", args.env_dim, "Dimension of the extension E");
    squashed->add_option("--environment-dim", args.environment_dim,
                         "Dimension of the traced environment");
    squashed->add_option("--restarts", args.restarts);
    add_seed(squashed);
    add_tolerance(squashed);
    add_output(squashed);

    auto *uncertainty = app.add_subcommand("uncertainty", "Channel uncertainty relation on random channels");
    uncertainty->add_option("--d", args.d)->required();
    uncertainty->add_option("--samples", args.samples);
    uncertainty->add_flag("--hadamard", args.hadamard, "Use H^{(x)l} as the basis change");
    add_seed(uncertainty);
    add_tolerance(uncertainty);
    add_output(uncertainty);

    auto *horn = app.add_subcommand("horn", "Search for pA + (1-p)B with a given spectrum");
    horn->add_option("--mu", args.mu_real)->delimiter(',')->required();
    horn->add_option("--nu", args.nu_real)->delimiter(',')->required();
    horn->add_option("--lam", args.lam_real)->delimiter(',')->required();
    horn->add_option("--p", args.p);
    horn->add_option("--restarts", args.restarts);
    add_seed(horn);
    add_output(horn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
        }
        return kExitUsage;
    }

    try {
        CLI::App *sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "dims") run_dims(args, config);
        else if (name == "kron") run_kron(args, config);
        else if (name == "lr") run_lr(args, config);
        else if (name == "cg") run_cg(args, config);
        else if (name == "classical-h") run_classical_h(args, config);
        else if (name == "scan") run_scan(args, config);
        else if (name == "bravyi") run_bravyi(args, config);
        else if (name == "estimate") run_estimate(args, config);
        else if (name == "measures") run_measures(args, config);
        else if (name == "squashed") run_squashed(args, config);
        else if (name == "uncertainty") run_uncertainty(args, config);
        else if (name == "horn") run_horn(args, config);
    } catch (const ResourceError &e) {
        std::cerr << "spectrakit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc &) {
        std::cerr << "spectrakit: out of memory\n";
        return kExitResource;
    } catch (const DomainError &e) {
        std::cerr << "spectrakit: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception &e) {
        std::cerr << "spectrakit: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

// Command-line front end: topology generation, zone inspection, single
// engine runs, and size sweeps with CSV output. Identical flags always
// produce byte-identical outputs.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zrpsim/experiment.hpp"
#include "zrpsim/format.hpp"

namespace fs = std::filesystem;
using namespace zrpsim;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid " + what + ": '" + text + "'");
    }
}

// Either "first:last:step" (inclusive ends) or a comma-separated list.
std::vector<int> parse_sizes(const std::string& spec) {
    std::vector<int> sizes;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("--sizes range must be first:last:step");
        const int first = parse_int(parts[0], "size");
        const int last = parse_int(parts[1], "size");
        const int step = parse_int(parts[2], "step");
        if (step < 1 || first > last || first < 2)
            throw std::invalid_argument("--sizes range is empty or malformed");
        for (int n = first; n <= last; n += step) sizes.push_back(n);
    } else {
        for (const auto& part : split(spec, ','))
            sizes.push_back(parse_int(part, "size"));
        for (int n : sizes)
            if (n < 2) throw std::invalid_argument("sizes must be >= 2");
        if (sizes.empty()) throw std::invalid_argument("--sizes list is empty");
    }
    return sizes;
}

std::vector<EngineKind> parse_engines(const std::string& spec) {
    std::vector<EngineKind> engines;
    for (const auto& part : split(spec, ',')) {
        const auto kind = parse_engine_name(part);
        if (!kind)
            throw std::invalid_argument(
                "unknown engine '" + part + "' (expected ga, eda-umda, eda-gauss)");
        engines.push_back(*kind);
    }
    if (engines.empty()) throw std::invalid_argument("--engines list is empty");
    return engines;
}

std::string opt_num(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string{};
}

std::string opt_int(const std::optional<int>& value) {
    return value ? std::to_string(*value) : std::string{};
}

// Flag bundle shared by run and sweep.
struct EngineFlags {
    int pop = 50;
    double sel_frac = 0.5;
    double pc = 0.9;
    double pm = 0.9;
    int max_gen = 1000;
    int stall = 50;
    int tournament = 2;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--pop", pop, "Population size")->capture_default_str();
        cmd->add_option("--sel-frac", sel_frac, "EDA truncation fraction")
            ->capture_default_str();
        cmd->add_option("--pc", pc, "GA crossover probability")->capture_default_str();
        cmd->add_option("--pm", pm, "GA mutation probability")->capture_default_str();
        cmd->add_option("--max-gen", max_gen, "Generation cap")->capture_default_str();
        cmd->add_option("--stall", stall, "Stall window for convergence")
            ->capture_default_str();
        cmd->add_option("--tournament", tournament, "GA tournament size")
            ->capture_default_str();
    }

    GaParams ga(std::uint64_t seed) const {
        GaParams p;
        p.population_size = pop;
        p.crossover_prob = pc;
        p.mutation_prob = pm;
        p.max_generations = max_gen;
        p.stall_window = stall;
        p.tournament_size = tournament;
        p.seed = seed;
        return p;
    }

    EdaParams eda(std::uint64_t seed) const {
        EdaParams p;
        p.population_size = pop;
        p.selected_fraction = sel_frac;
        p.max_generations = max_gen;
        p.stall_window = stall;
        p.seed = seed;
        return p;
    }
};

int cmd_gen_net(int n, double avg_degree, int cost_min, int cost_max,
                std::uint64_t seed, const std::string& out_path) {
    TopologyParams params;
    params.n = n;
    params.target_avg_degree = avg_degree;
    params.cost_min = cost_min;
    params.cost_max = cost_max;
    params.seed = seed;
    const Network net = generate_random_network(params);
    write_file(out_path, write_edge_list(net));
    return 0;
}

int cmd_zones(const std::string& net_path, int radius, const std::string& out_path) {
    const Network net = load_network(read_file(net_path));
    const ZoneTable zones = build_zone_table(net, ZoneParams{radius});

    std::ostringstream out;
    for (const Zone& zone : zones) {
        out << zone.center << " | ";
        for (std::size_t i = 0; i < zone.members.size(); ++i)
            out << (i ? "," : "") << zone.members[i];
        out << " | ";
        for (std::size_t i = 0; i < zone.peripheral.size(); ++i)
            out << (i ? "," : "") << zone.peripheral[i];
        out << '\n';
    }
    if (out_path.empty())
        std::cout << out.str();
    else
        write_file(out_path, out.str());
    return 0;
}

int cmd_run(const std::string& net_path, int n, double avg_degree, int cost_min,
            int cost_max, int radius, std::optional<NodeId> src,
            std::optional<NodeId> dst, const std::string& engine_spec,
            const EngineFlags& flags, std::uint64_t seed,
            const std::string& out_dir, bool require_reachable) {
    const auto kind = parse_engine_name(engine_spec);
    if (!kind)
        throw std::invalid_argument("unknown engine '" + engine_spec +
                                    "' (expected ga, eda-umda, eda-gauss)");
    if (src.has_value() != dst.has_value())
        throw std::invalid_argument("--src and --dst must be given together");

    TrialConfig config;
    if (!net_path.empty()) {
        config.topology = std::make_shared<const Network>(load_network(read_file(net_path)));
    } else {
        if (n <= 0)
            throw std::invalid_argument("either --net or --n must be given");
        TopologyParams params;
        params.n = n;
        params.target_avg_degree = avg_degree;
        params.cost_min = cost_min;
        params.cost_max = cost_max;
        params.seed = derive_seed(seed, 1, 0);
        config.topology = params;
    }
    config.radius = radius;
    if (src) config.endpoints = std::make_pair(*src, *dst);
    config.engine = *kind;
    config.trial_seed = derive_seed(seed, 2, 0);
    const std::uint64_t engine_seed = derive_seed(seed, 3, 0);
    config.ga = flags.ga(engine_seed);
    config.eda = flags.eda(engine_seed);

    const TrialResult result = run_trial(config);
    if (require_reachable && !result.oracle_cost) {
        std::cerr << "error: destination unreachable from source on the overlay\n";
        return 3;
    }

    fs::create_directories(out_dir);
    std::ostringstream csv;
    csv << "generation,best_fitness,avg_fitness\n";
    for (int g = 0; g < result.run.generations_used; ++g)
        csv << g << ',' << format_double(result.run.best_per_gen[static_cast<std::size_t>(g)])
            << ',' << format_double(result.run.avg_per_gen[static_cast<std::size_t>(g)])
            << '\n';
    write_file(fs::path(out_dir) / "run.csv", csv.str());

    std::cout << engine_name(result.engine) << ',' << result.n << ','
              << result.radius << ',' << seed << ',' << result.run.generations_used
              << ',' << format_double(result.run.best_fitness) << ','
              << opt_num(result.oracle_cost) << ','
              << opt_int(result.run.converged_at) << '\n';
    return 0;
}

int cmd_sweep(const std::string& sizes_spec, int repeats,
              const std::string& engines_spec, double avg_degree, int cost_min,
              int cost_max, int radius, const EngineFlags& flags,
              std::uint64_t seed, const std::string& out_dir, int fig5_n) {
    const std::vector<int> sizes = parse_sizes(sizes_spec);
    const std::vector<EngineKind> engines = parse_engines(engines_spec);
    if (fig5_n == 0) fig5_n = sizes.back();
    if (std::find(sizes.begin(), sizes.end(), fig5_n) == sizes.end())
        throw std::invalid_argument("--fig5-n must be one of the sweep sizes");

    TrialConfig base;
    TopologyParams params;
    params.n = sizes.front();
    params.target_avg_degree = avg_degree;
    params.cost_min = cost_min;
    params.cost_max = cost_max;
    base.topology = params;
    base.radius = radius;
    base.trial_seed = seed;
    base.ga = flags.ga(seed);
    base.eda = flags.eda(seed);

    const SweepSummary summary = sweep(sizes, repeats, base, engines);

    fs::create_directories(out_dir);
    {
        std::ostringstream csv;
        csv << "n,engine,mean_generations,std_generations,converged_count\n";
        for (const auto& cell : summary.cells)
            csv << cell.n << ',' << engine_name(cell.engine) << ','
                << format_double(cell.mean_generations) << ','
                << format_double(cell.std_generations) << ','
                << cell.converged_count << '\n';
        write_file(fs::path(out_dir) / "fig3.csv", csv.str());
    }
    {
        std::ostringstream csv;
        csv << "n,engine,mean_best,std_best\n";
        for (const auto& cell : summary.cells)
            csv << cell.n << ',' << engine_name(cell.engine) << ','
                << format_double(cell.mean_best) << ','
                << format_double(cell.std_best) << '\n';
        write_file(fs::path(out_dir) / "fig4.csv", csv.str());
    }
    {
        std::ostringstream csv;
        csv << "generation,engine,mean_avg_fitness\n";
        for (const EngineKind engine : engines)
            for (const auto& cell : summary.cells)
                if (cell.n == fig5_n && cell.engine == engine)
                    for (std::size_t g = 0; g < cell.mean_avg_curve.size(); ++g)
                        csv << g << ',' << engine_name(engine) << ','
                            << format_double(cell.mean_avg_curve[g]) << '\n';
        write_file(fs::path(out_dir) / "fig5.csv", csv.str());
    }
    {
        std::ostringstream csv;
        csv << "n,engine,repeat,trial_seed,source,destination,generations,best,"
               "oracle,oracle_gap,converged_at\n";
        for (const auto& tr : summary.trials)
            csv << tr.n << ',' << engine_name(tr.engine) << ',' << tr.repeat << ','
                << tr.trial_seed << ',' << tr.source << ',' << tr.destination << ','
                << tr.run.generations_used << ','
                << format_double(tr.run.best_fitness) << ','
                << opt_num(tr.oracle_cost) << ',' << opt_num(tr.oracle_gap) << ','
                << opt_int(tr.run.converged_at) << '\n';
        write_file(fs::path(out_dir) / "trials.csv", csv.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inter-zone route discovery testbed: GA vs EDA over ZRP bordercast overlays"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read defaults from an INI/TOML file (flags win)");

    // gen-net
    auto* gen = app.add_subcommand("gen-net", "Generate a random geometric topology");
    int gen_n = 0;
    double gen_degree = 8.0;
    int gen_cost_min = 1, gen_cost_max = 10;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Node count")->required();
    gen->add_option("--avg-degree", gen_degree, "Target average degree")
        ->capture_default_str();
    gen->add_option("--cost-min", gen_cost_min, "Minimum edge cost")
        ->capture_default_str();
    gen->add_option("--cost-max", gen_cost_max, "Maximum edge cost")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output edge-list file")->required();

    // zones
    auto* zones = app.add_subcommand("zones", "Dump routing zones of a topology");
    std::string zones_net;
    int zones_r = 2;
    std::string zones_out;
    zones->add_option("--net", zones_net, "Edge-list file")->required();
    zones->add_option("--r", zones_r, "Zone radius")->capture_default_str();
    zones->add_option("--out", zones_out, "Output file (default: stdout)");

    // run
    auto* run = app.add_subcommand("run", "Run one engine on one instance");
    std::string run_net;
    int run_n = 0;
    double run_degree = 8.0;
    int run_cost_min = 1, run_cost_max = 10;
    int run_r = 2;
    NodeId run_src = 0, run_dst = 0;
    std::string run_engine = "ga";
    EngineFlags run_flags;
    std::uint64_t run_seed = 1;
    std::string run_out_dir = ".";
    bool run_require_reachable = false;
    auto* run_net_opt = run->add_option("--net", run_net, "Edge-list file");
    auto* run_n_opt = run->add_option("--n", run_n, "Node count for a generated topology");
    run_net_opt->excludes(run_n_opt);
    run->add_option("--avg-degree", run_degree, "Target average degree")
        ->capture_default_str();
    run->add_option("--cost-min", run_cost_min, "Minimum edge cost")
        ->capture_default_str();
    run->add_option("--cost-max", run_cost_max, "Maximum edge cost")
        ->capture_default_str();
    run->add_option("--r", run_r, "Zone radius")->capture_default_str();
    auto* src_opt = run->add_option("--src", run_src, "Source node");
    auto* dst_opt = run->add_option("--dst", run_dst, "Destination node");
    run->add_option("--engine", run_engine, "ga | eda-umda | eda-gauss")
        ->capture_default_str();
    run_flags.add_to(run);
    run->add_option("--seed", run_seed, "Seed")->capture_default_str();
    run->add_option("--out-dir", run_out_dir, "Directory for run.csv")
        ->capture_default_str();
    run->add_flag("--require-reachable", run_require_reachable,
                  "Exit 3 when the destination is unreachable on the overlay");

    // sweep
    auto* sw = app.add_subcommand("sweep", "Sweep network sizes and engines");
    std::string sw_sizes;
    int sw_repeats = 10;
    std::string sw_engines = "ga,eda-umda";
    double sw_degree = 8.0;
    int sw_cost_min = 1, sw_cost_max = 10;
    int sw_r = 2;
    EngineFlags sw_flags;
    std::uint64_t sw_seed = 1;
    std::string sw_out_dir = ".";
    int sw_fig5_n = 0;
    sw->add_option("--sizes", sw_sizes, "first:last:step or comma list")->required();
    sw->add_option("--repeats", sw_repeats, "Repeats per size")->capture_default_str();
    sw->add_option("--engines", sw_engines, "Comma list of engines")
        ->capture_default_str();
    sw->add_option("--avg-degree", sw_degree, "Target average degree")
        ->capture_default_str();
    sw->add_option("--cost-min", sw_cost_min, "Minimum edge cost")
        ->capture_default_str();
    sw->add_option("--cost-max", sw_cost_max, "Maximum edge cost")
        ->capture_default_str();
    sw->add_option("--r", sw_r, "Zone radius")->capture_default_str();
    sw_flags.add_to(sw);
    sw->add_option("--seed", sw_seed, "Base seed")->capture_default_str();
    sw->add_option("--out-dir", sw_out_dir, "Directory for the CSV files")
        ->capture_default_str();
    sw->add_option("--fig5-n", sw_fig5_n,
                   "Size whose mean fitness curve goes to fig5.csv (default: largest)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen_net(gen_n, gen_degree, gen_cost_min, gen_cost_max,
                               gen_seed, gen_out);
        if (zones->parsed()) return cmd_zones(zones_net, zones_r, zones_out);
        if (run->parsed())
            return cmd_run(run_net, run_n, run_degree, run_cost_min, run_cost_max,
                           run_r,
                           src_opt->count() ? std::optional<NodeId>(run_src) : std::nullopt,
                           dst_opt->count() ? std::optional<NodeId>(run_dst) : std::nullopt,
                           run_engine, run_flags, run_seed, run_out_dir,
                           run_require_reachable);
        if (sw->parsed())
            return cmd_sweep(sw_sizes, sw_repeats, sw_engines, sw_degree,
                             sw_cost_min, sw_cost_max, sw_r, sw_flags, sw_seed,
                             sw_out_dir, sw_fig5_n);
        std::cerr << "error: no subcommand given\n";
        return 2;
    } catch (const EndpointSamplingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

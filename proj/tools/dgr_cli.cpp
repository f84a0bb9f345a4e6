// Command-line front end: simulate, sweep, landscape, catalog, null-model.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "dgr/experiment.hpp"

namespace {

struct Options {
    std::string strategy = "independent";
    int agents = 1;
    double imitation_prob = 0.0;
    int board_size = dgr::kCatalogSize;
    std::size_t runs = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::optional<double> max_cost;
    std::string output;
    std::string format = "csv";
    std::vector<double> sweep_p;
    std::vector<double> sweep_agents;
    std::vector<double> sweep_board;
    std::vector<int> board_sizes = {7, 20, 351};
};

constexpr double kNullModelDefaultMaxCost = 0.1;

dgr::SearchParams search_params(const Options& o) {
    dgr::SearchParams p;
    p.strategy = dgr::strategy_from_string(o.strategy);
    p.agents = o.agents;
    p.imitation_prob = o.imitation_prob;
    p.board_size = o.board_size;
    if (o.max_cost) {
        if (!(*o.max_cost > 0.0)) throw std::invalid_argument("--max-cost must be positive");
        p.max_time = dgr::max_time_for_cost(*o.max_cost, o.agents);
    }
    p.validate();
    return p;
}

unsigned thread_count(const Options& o) {
    return o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
}

// Writes `text` to the --output path, or stdout when none was given.
void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + o.output);
    out << text;
    if (!out) throw std::runtime_error("failed writing output file: " + o.output);
}

int cmd_simulate(const Options& o) {
    const auto params = search_params(o);
    const auto records = dgr::run_batch(params, o.runs, o.seed, thread_count(o));
    const auto summary = dgr::summarize_batch(params, records);
    if (!o.output.empty()) {
        std::ostringstream os;
        if (o.format == "json") {
            nlohmann::ordered_json doc;
            doc["metadata"] = dgr::run_metadata(o.seed);
            doc["summary"] = dgr::summary_to_json(summary);
            auto& runs = doc["runs"] = nlohmann::ordered_json::array();
            for (const auto& r : records) runs.push_back(dgr::record_to_json(r));
            os << doc.dump(2) << '\n';
        } else {
            dgr::write_records_csv(os, records);
        }
        emit(o, os.str());
    }
    nlohmann::ordered_json line = dgr::summary_to_json(summary);
    line["metadata"] = dgr::run_metadata(o.seed);
    std::cout << line.dump() << '\n';
    return 0;
}

int cmd_sweep(const Options& o) {
    const int given = !o.sweep_p.empty() + !o.sweep_agents.empty() + !o.sweep_board.empty();
    if (given != 1)
        throw std::invalid_argument("sweep needs exactly one of --sweep-p, --sweep-agents, --sweep-board");
    dgr::SweepAxis axis = dgr::SweepAxis::imitation_prob;
    const std::vector<double>* values = &o.sweep_p;
    if (!o.sweep_agents.empty()) axis = dgr::SweepAxis::agents, values = &o.sweep_agents;
    if (!o.sweep_board.empty()) axis = dgr::SweepAxis::board_size, values = &o.sweep_board;

    Options base = o;
    base.max_cost.reset();
    const auto params = search_params(base);
    const auto rows =
        dgr::run_sweep(params, axis, *values, o.runs, o.seed, thread_count(o), o.max_cost);
    std::ostringstream os;
    if (o.format == "json") {
        auto doc = dgr::sweep_to_json(axis, rows);
        doc["metadata"] = dgr::run_metadata(o.seed);
        os << doc.dump(2) << '\n';
    } else {
        dgr::write_sweep_csv(os, axis, rows);
    }
    emit(o, os.str());
    return 0;
}

int cmd_landscape(const Options& o) {
    const auto report = dgr::enumerate_minima(thread_count(o));
    emit(o, dgr::minima_report_to_json(report).dump(2) + "\n");
    return 0;
}

int cmd_catalog(const Options& o) {
    std::ostringstream os;
    if (o.format == "json")
        os << dgr::catalog_to_json(dgr::catalog()).dump(2) << '\n';
    else
        dgr::write_catalog_csv(os, dgr::catalog());
    emit(o, os.str());
    return 0;
}

int cmd_null_model(const Options& o) {
    Options base = o;
    base.strategy = "null-model";
    base.board_size = o.board_sizes.empty() ? 1 : o.board_sizes.front();
    // A frozen board may lack the hints that lead to the solution.
    if (!base.max_cost) base.max_cost = kNullModelDefaultMaxCost;
    const auto params = search_params(base);
    const auto rows =
        dgr::run_null_model_table(params, o.board_sizes, o.runs, o.seed, thread_count(o));
    std::ostringstream os;
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["metadata"] = dgr::run_metadata(o.seed);
        doc["rows"] = dgr::null_model_to_json(rows);
        os << doc.dump(2) << '\n';
    } else {
        dgr::write_null_model_csv(os, rows);
    }
    emit(o, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collective search on DONALD + GERALD = ROBERT"};
    app.set_config("--config", "", "Flat key = value file with flag names as keys");
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    double max_cost = 0.0;
    app.add_option("--strategy", o.strategy, "independent | imitative | blackboard | null-model")
        ->check(CLI::IsMember({"independent", "imitative", "blackboard", "null-model"}));
    app.add_option("--agents", o.agents, "Group size M")->check(CLI::PositiveNumber);
    app.add_option("--imitation-prob", o.imitation_prob, "Imitation probability p")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--board-size", o.board_size, "Blackboard capacity B (351 = unlimited)")
        ->check(CLI::Range(0, dgr::kCatalogSize));
    app.add_option("--runs", o.runs, "Independent runs")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--threads", o.threads, "Worker threads (default: all cores)");
    auto* max_cost_opt =
        app.add_option("--max-cost", max_cost, "Censor runs once C exceeds this value (null-model default 0.1)");
    app.add_option("--output", o.output, "Output file (default: stdout)");
    app.add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--sweep-p", o.sweep_p, "Sweep values of p")->delimiter(',');
    app.add_option("--sweep-agents", o.sweep_agents, "Sweep values of M")->delimiter(',');
    app.add_option("--sweep-board", o.sweep_board, "Sweep values of B")->delimiter(',');
    app.add_option("--board-sizes", o.board_sizes, "Board sizes for null-model")->delimiter(',');

    auto* simulate = app.add_subcommand("simulate", "Run independent searches and summarize");
    auto* sweep = app.add_subcommand("sweep", "Mean cost along one parameter axis");
    auto* landscape = app.add_subcommand("landscape", "Census of landscape minima (JSON)");
    auto* catalog = app.add_subcommand("catalog", "List all column hints");
    auto* null_model = app.add_subcommand("null-model", "Random frozen board phi vs analytic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (*max_cost_opt) o.max_cost = max_cost;

    try {
        if (*simulate) return cmd_simulate(o);
        if (*sweep) return cmd_sweep(o);
        if (*landscape) return cmd_landscape(o);
        if (*catalog) return cmd_catalog(o);
        if (*null_model) return cmd_null_model(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kb/analysis.hpp"
#include "kb/axioms.hpp"
#include "kb/csv_io.hpp"
#include "kb/dataset.hpp"
#include "kb/errors.hpp"
#include "kb/svg.hpp"

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read file: " + path);
    }
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw IoError("cannot write file: " + path);
    }
}

// --data beats KB_DATASET beats the embedded asset.
std::optional<std::string> dataset_override(const std::string& data_flag) {
    if (!data_flag.empty()) {
        return data_flag;
    }
    if (const char* env = std::getenv("KB_DATASET"); env != nullptr && *env != '\0') {
        return std::string(env);
    }
    return std::nullopt;
}

kb::Dataset load_dataset(const std::string& data_flag) {
    if (const auto path = dataset_override(data_flag)) {
        return kb::parse_dataset(read_file(*path));
    }
    return kb::embedded_dataset();
}

kb::IndexKind parse_index_flag(const std::string& name) {
    if (const auto kind = kb::parse_index(name)) {
        return *kind;
    }
    throw UsageError("unknown index: " + name +
                     " (expected euclidean|rectangle|hindex|sum)");
}

// "W1".."W4" or "w:a,b,c,d,e" with weights in the order W,F,SF,QF,R16.
kb::WeightScheme parse_weights_flag(const std::string& text) {
    if (!text.starts_with("w:")) {
        return kb::preset_scheme(text);
    }
    std::vector<double> values;
    std::string_view rest = std::string_view(text).substr(2);
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view field = rest.substr(0, comma);
        double value = 0.0;
        const auto [end, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || end != field.data() + field.size()) {
            throw UsageError("bad weight value '" + std::string(field) + "' in " + text);
        }
        values.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    if (values.size() != 5) {
        throw UsageError("custom weights need exactly 5 values (W,F,SF,QF,R16): " + text);
    }
    return kb::WeightScheme(text, values[0], values[1], values[2], values[3], values[4]);
}

void warn_discouraged(kb::IndexKind kind, const kb::WeightScheme& scheme) {
    if (kind == kb::IndexKind::Euclidean && scheme.name() == "W1") {
        std::cerr << "warning: the euclidean index squares scores, and W1 already grows "
                     "geometrically; combined they overweight titles\n";
    }
    if (kind == kb::IndexKind::Rectangle &&
        (scheme.name() == "W3" || scheme.name() == "W4")) {
        std::cerr << "note: with " << scheme.name()
                  << " the rectangle index often degenerates to a participation count\n";
    }
}

kb::EntityScope parse_scope_flags(const std::string& scope_name, const std::string& country,
                                  const std::string& group) {
    const bool within = scope_name == "within-country";
    const bool grouped = scope_name == "top5-vs-rest";
    if (within && country.empty()) {
        throw UsageError("--country is required with --scope within-country");
    }
    if (!within && !country.empty()) {
        throw UsageError("--country only applies to --scope within-country");
    }
    if (!grouped && !group.empty()) {
        throw UsageError("--group only applies to --scope top5-vs-rest");
    }
    if (scope_name == "clubs") {
        return kb::EntityScope::clubs();
    }
    if (scope_name == "countries") {
        return kb::EntityScope::countries();
    }
    if (within) {
        return kb::EntityScope::within_country(country);
    }
    if (grouped) {
        std::vector<std::string> members = kb::kTopFiveCountries;
        if (!group.empty()) {
            members.clear();
            std::stringstream parts(group);
            std::string member;
            while (std::getline(parts, member, ',')) {
                if (member.empty()) {
                    throw UsageError("empty country name in --group");
                }
                members.push_back(member);
            }
        }
        return kb::EntityScope::two_groups(std::move(members), "top5");
    }
    throw UsageError("unknown scope: " + scope_name +
                     " (expected clubs|countries|top5-vs-rest|within-country)");
}

// The scope's display name in hhi series output.
std::string scope_label(const kb::EntityScope& scope) {
    switch (scope.kind) {
        case kb::EntityScope::Kind::Clubs:
            return "clubs";
        case kb::EntityScope::Kind::Countries:
            return "countries";
        case kb::EntityScope::Kind::TwoGroups:
            return scope.group_label;
        case kb::EntityScope::Kind::WithinCountry:
            return scope.country;
    }
    return "";
}

kb::Window resolve_window(const kb::Dataset& data, std::optional<int> window_len,
                          std::optional<int> first_season) {
    const std::vector<int>& seasons = data.seasons();
    if (seasons.empty()) {
        throw kb::WindowTooLongError("dataset has no seasons");
    }
    if (!window_len && !first_season) {
        return kb::full_window(seasons);
    }
    int first = 0;
    int length = 0;
    if (window_len) {
        if (*window_len <= 0) {
            throw UsageError("--window-len must be positive");
        }
        length = *window_len;
        first = first_season ? *first_season : seasons.back() - length + 1;
    } else {
        first = *first_season;
        length = seasons.back() - first + 1;
    }
    const kb::Window window{first, static_cast<std::size_t>(length)};
    for (int season = window.first_season; season <= window.last_season(); ++season) {
        if (!std::binary_search(seasons.begin(), seasons.end(), season)) {
            throw UsageError("season " + std::to_string(season) +
                             " of the requested window is not in the dataset");
        }
    }
    return window;
}

int cmd_validate(const std::string& path, const std::string& data_flag) {
    std::string csv;
    if (!path.empty()) {
        csv = read_file(path);
    } else if (const auto resolved = dataset_override(data_flag)) {
        csv = read_file(*resolved);
    } else {
        csv = kb::embedded_dataset_csv();
    }
    const std::vector<kb::ParticipationRecord> records = kb::parse_records(csv);
    const kb::ValidationReport report = kb::validate_dataset(records);
    if (!report.ok()) {
        for (const auto& problem : report.problems) {
            std::cout << problem << '\n';
        }
        return 1;
    }
    const kb::Dataset data(records);
    std::cout << "ok: " << data.records().size() << " records, " << data.seasons().size()
              << " seasons, " << data.clubs().size() << " clubs, " << data.countries().size()
              << " countries\n";
    return 0;
}

int cmd_axioms(std::uint64_t seed, std::size_t trials) {
    const kb::BatteryResult result = kb::run_axiom_battery(seed, trials);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
    std::printf("trials: %zu\n", trials);
    std::printf("%-25s %-11s %s\n", "axiom", "euclidean", "rectangle");
    for (kb::Axiom axiom : kb::kAllAxioms) {
        const auto& e = result.cell(kb::IndexKind::Euclidean, axiom);
        const auto& r = result.cell(kb::IndexKind::Rectangle, axiom);
        std::printf("%-25s %-11s %s\n", std::string(kb::axiom_name(axiom)).c_str(),
                    e.violations == 0 ? "satisfied" : "violated",
                    r.violations == 0 ? "satisfied" : "violated");
    }
    std::printf("sqrt(n)-scaled euclidean satisfies uniform citation: %s\n",
                result.sqrt_n_repair_ok ? "yes" : "no");
    const bool ok = kb::matches_expected_pattern(result);
    std::printf("pattern: %s\n", ok ? "expected" : "UNEXPECTED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knockout tournament performance and competitive balance toolkit"};
    app.require_subcommand(1);

    std::string data_flag;

    auto* validate = app.add_subcommand("validate", "check a dataset file");
    std::string validate_path;
    validate->add_option("path", validate_path, "dataset CSV path");
    validate->add_option("--data", data_flag, "dataset CSV path (default: embedded data)");

    auto* rank = app.add_subcommand("rank", "rank clubs or countries over one window");
    std::string rank_entity = "club";
    std::string rank_index = "euclidean";
    std::string rank_weights = "W2";
    std::size_t rank_top = 0;
    std::optional<int> rank_window_len;
    std::optional<int> rank_first_season;
    std::string rank_output;
    rank->add_option("--entity", rank_entity, "club|country")
        ->check(CLI::IsMember({"club", "country"}));
    rank->add_option("--index", rank_index, "euclidean|rectangle|hindex|sum");
    rank->add_option("--weights", rank_weights, "W1|W2|W3|W4|w:a,b,c,d,e");
    rank->add_option("--top", rank_top, "keep entries ranked at most this (0 = all)");
    rank->add_option("--window-len", rank_window_len, "window length in seasons");
    rank->add_option("--first-season", rank_first_season, "first season of the window");
    rank->add_option("--data", data_flag, "dataset CSV path (default: embedded data)");
    rank->add_option("-o,--output", rank_output, "write CSV here instead of stdout");

    auto* share = app.add_subcommand("share", "one entity's market share per rolling window");
    std::string share_scope = "clubs";
    std::string share_entity;
    std::string share_index = "euclidean";
    std::string share_weights = "W2";
    std::string share_country;
    std::string share_group;
    int share_window_len = 5;
    std::string share_output;
    share->add_option("--scope", share_scope, "clubs|countries|top5-vs-rest|within-country");
    share->add_option("--entity", share_entity, "entity name within the scope")->required();
    share->add_option("--index", share_index, "euclidean|rectangle|hindex|sum");
    share->add_option("--weights", share_weights, "W1|W2|W3|W4|w:a,b,c,d,e");
    share->add_option("--country", share_country, "focal country for within-country");
    share->add_option("--group", share_group, "comma-separated group members");
    share->add_option("--window-len", share_window_len, "window length in seasons");
    share->add_option("--data", data_flag, "dataset CSV path (default: embedded data)");
    share->add_option("-o,--output", share_output, "write CSV here instead of stdout");

    auto* hhi = app.add_subcommand("hhi", "concentration (HHI) per rolling window");
    std::string hhi_scope = "clubs";
    std::string hhi_index = "euclidean";
    std::string hhi_weights = "W2";
    std::string hhi_country;
    std::string hhi_group;
    int hhi_window_len = 5;
    std::string hhi_output;
    hhi->add_option("--scope", hhi_scope, "clubs|countries|top5-vs-rest|within-country");
    hhi->add_option("--index", hhi_index, "euclidean|rectangle|hindex|sum");
    hhi->add_option("--weights", hhi_weights, "W1|W2|W3|W4|w:a,b,c,d,e");
    hhi->add_option("--country", hhi_country, "focal country for within-country");
    hhi->add_option("--group", hhi_group, "comma-separated group members");
    hhi->add_option("--window-len", hhi_window_len, "window length in seasons");
    hhi->add_option("--data", data_flag, "dataset CSV path (default: embedded data)");
    hhi->add_option("-o,--output", hhi_output, "write CSV here instead of stdout");

    auto* axioms = app.add_subcommand("axioms", "run the axiom fixture and battery report");
    std::uint64_t axioms_seed = 42;
    std::size_t axioms_trials = 10000;
    axioms->add_option("--seed", axioms_seed, "battery RNG seed");
    axioms->add_option("--trials", axioms_trials, "random instances per axiom");

    auto* plot = app.add_subcommand("plot", "render a series CSV as an SVG line chart");
    std::string plot_input;
    std::string plot_output;
    std::string plot_title;
    plot->add_option("input", plot_input, "series CSV path")->required();
    plot->add_option("-o,--output", plot_output, "write SVG here instead of stdout");
    plot->add_option("--title", plot_title, "chart title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) {
            return cmd_validate(validate_path, data_flag);
        }
        if (*rank) {
            const kb::Dataset data = load_dataset(data_flag);
            const kb::IndexKind kind = parse_index_flag(rank_index);
            const kb::WeightScheme scheme = parse_weights_flag(rank_weights);
            warn_discouraged(kind, scheme);
            const kb::EntityScope scope = rank_entity == "club"
                                              ? kb::EntityScope::clubs()
                                              : kb::EntityScope::countries();
            const kb::Window window = resolve_window(data, rank_window_len, rank_first_season);
            kb::RankedList list = kb::rank_entities(data, scope, kind, scheme, window);
            if (rank_top > 0) {
                list = kb::top_of(list, rank_top);
            }
            write_output(rank_output, kb::ranking_csv(list));
            return 0;
        }
        if (*share) {
            const kb::Dataset data = load_dataset(data_flag);
            const kb::IndexKind kind = parse_index_flag(share_index);
            const kb::WeightScheme scheme = parse_weights_flag(share_weights);
            warn_discouraged(kind, scheme);
            const kb::EntityScope scope =
                parse_scope_flags(share_scope, share_country, share_group);
            if (share_window_len <= 0) {
                throw UsageError("--window-len must be positive");
            }
            const kb::Series series =
                kb::share_series(data, scope, share_entity, kind, scheme,
                                 static_cast<std::size_t>(share_window_len));
            write_output(share_output, kb::series_csv(kb::rows_of(series, share_entity)));
            return 0;
        }
        if (*hhi) {
            const kb::Dataset data = load_dataset(data_flag);
            const kb::IndexKind kind = parse_index_flag(hhi_index);
            const kb::WeightScheme scheme = parse_weights_flag(hhi_weights);
            warn_discouraged(kind, scheme);
            const kb::EntityScope scope =
                parse_scope_flags(hhi_scope, hhi_country, hhi_group);
            if (hhi_window_len <= 0) {
                throw UsageError("--window-len must be positive");
            }
            const kb::Series series = kb::balance_series(
                data, scope, kind, scheme, static_cast<std::size_t>(hhi_window_len));
            write_output(hhi_output, kb::series_csv(kb::rows_of(series, scope_label(scope))));
            return 0;
        }
        if (*axioms) {
            return cmd_axioms(axioms_seed, axioms_trials);
        }
        if (*plot) {
            const std::vector<kb::SeriesCsvRow> rows =
                kb::parse_series_csv(read_file(plot_input));
            write_output(plot_output, kb::render_series_svg(rows, plot_title));
            return 0;
        }
    } catch (const kb::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const kb::AllZeroError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const kb::SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const kb::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

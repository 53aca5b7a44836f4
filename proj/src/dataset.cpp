#include "kb/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "kb/errors.hpp"

namespace kb {

namespace {

constexpr std::string_view kHeader = "season,club,country,stage";

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

int parse_season(std::string_view field, std::size_t line_no) {
    int season = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), season);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw SyntaxError(line_no, "season is not a base-10 integer: '" + std::string(field) +
                                       "'");
    }
    return season;
}

bool record_key_less(const ParticipationRecord& a, const ParticipationRecord& b) {
    if (a.season != b.season) {
        return a.season < b.season;
    }
    return a.club < b.club;
}

}  // namespace

std::vector<ParticipationRecord> parse_records(std::string_view csv) {
    std::vector<ParticipationRecord> records;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t newline = csv.find('\n', start);
        const std::size_t end = newline == std::string_view::npos ? csv.size() : newline;
        const std::string_view line = strip_cr(csv.substr(start, end - start));
        ++line_no;
        start = end + 1;
        if (newline == std::string_view::npos && line.empty()) {
            break;
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kHeader) {
                throw SyntaxError(line_no, "expected header '" + std::string(kHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        const std::vector<std::string_view> fields = split_fields(line);
        if (fields.size() != 4) {
            throw SyntaxError(line_no, "expected 4 comma-separated fields, got " +
                                           std::to_string(fields.size()));
        }
        ParticipationRecord record;
        record.season = parse_season(fields[0], line_no);
        record.club = std::string(fields[1]);
        record.country = std::string(fields[2]);
        if (record.club.empty()) {
            throw SyntaxError(line_no, "club name is empty");
        }
        if (record.country.empty()) {
            throw SyntaxError(line_no, "country name is empty");
        }
        const std::optional<Stage> stage = parse_stage(fields[3]);
        if (!stage) {
            throw SyntaxError(line_no, "unknown stage '" + std::string(fields[3]) + "'");
        }
        record.stage = *stage;
        records.push_back(std::move(record));
    }
    if (!header_seen) {
        throw SyntaxError(1, "expected header '" + std::string(kHeader) + "'");
    }
    return records;
}

ValidationReport validate_dataset(const std::vector<ParticipationRecord>& records) {
    ValidationReport report;

    constexpr std::array<Stage, 5> winner_first = {Stage::W, Stage::F, Stage::SF, Stage::QF,
                                                   Stage::R16};
    std::map<int, std::array<std::size_t, 5>> stage_counts;
    for (const auto& r : records) {
        stage_counts[r.season][static_cast<std::size_t>(r.stage)] += 1;
    }
    for (const auto& [season, counts] : stage_counts) {
        for (Stage s : winner_first) {
            const std::size_t count = counts[static_cast<std::size_t>(s)];
            if (count != expected_count(s)) {
                report.problems.push_back("season " + std::to_string(season) + ": stage " +
                                          std::string(stage_token(s)) + " count " +
                                          std::to_string(count) + " (expected " +
                                          std::to_string(expected_count(s)) + ")");
            }
        }
    }

    std::set<std::pair<int, std::string>> seen;
    std::set<std::pair<int, std::string>> reported;
    for (const auto& r : records) {
        const std::pair<int, std::string> key{r.season, r.club};
        if (!seen.insert(key).second && reported.insert(key).second) {
            report.problems.push_back("season " + std::to_string(r.season) +
                                      ": duplicate club " + r.club);
        }
    }

    std::map<std::string, std::set<std::string>> club_countries;
    for (const auto& r : records) {
        club_countries[r.club].insert(r.country);
    }
    for (const auto& [club, countries] : club_countries) {
        if (countries.size() > 1) {
            std::string joined;
            for (const auto& c : countries) {
                if (!joined.empty()) {
                    joined += ", ";
                }
                joined += c;
            }
            report.problems.push_back("club " + club + " listed under multiple countries: " +
                                      joined);
        }
    }

    return report;
}

Dataset::Dataset(std::vector<ParticipationRecord> records) : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(), record_key_less);
    std::set<int> seasons;
    std::set<std::string> clubs;
    std::set<std::string> countries;
    for (const auto& r : records_) {
        seasons.insert(r.season);
        clubs.insert(r.club);
        countries.insert(r.country);
        club_country_.emplace(r.club, r.country);
    }
    seasons_.assign(seasons.begin(), seasons.end());
    clubs_.assign(clubs.begin(), clubs.end());
    countries_.assign(countries.begin(), countries.end());
}

bool Dataset::has_club(std::string_view club) const {
    return club_country_.find(club) != club_country_.end();
}

bool Dataset::has_country(std::string_view country) const {
    return std::binary_search(countries_.begin(), countries_.end(), country);
}

const std::string& Dataset::country_of(std::string_view club) const {
    const auto it = club_country_.find(club);
    if (it == club_country_.end()) {
        throw UnknownClubError("unknown club: " + std::string(club));
    }
    return it->second;
}

std::optional<Stage> Dataset::stage_of(int season, std::string_view club) const {
    const std::pair<int, std::string_view> key{season, club};
    const auto it = std::lower_bound(
        records_.begin(), records_.end(), key,
        [](const ParticipationRecord& r, const std::pair<int, std::string_view>& k) {
            return std::pair<int, std::string_view>{r.season, r.club} < k;
        });
    if (it != records_.end() && it->season == season && it->club == club) {
        return it->stage;
    }
    return std::nullopt;
}

std::vector<std::pair<int, Stage>> Dataset::participations_of_club(std::string_view club) const {
    if (!has_club(club)) {
        throw UnknownClubError("unknown club: " + std::string(club));
    }
    std::vector<std::pair<int, Stage>> out;
    for (const auto& r : records_) {
        if (r.club == club) {
            out.emplace_back(r.season, r.stage);
        }
    }
    return out;
}

std::vector<std::pair<int, Stage>> Dataset::participations_of_country(
    std::string_view country) const {
    if (!has_country(country)) {
        throw UnknownCountryError("unknown country: " + std::string(country));
    }
    std::vector<std::pair<int, Stage>> out;
    for (const auto& r : records_) {
        if (r.country == country) {
            out.emplace_back(r.season, r.stage);
        }
    }
    return out;
}

std::vector<std::string> Dataset::clubs_of_country(std::string_view country) const {
    if (!has_country(country)) {
        throw UnknownCountryError("unknown country: " + std::string(country));
    }
    std::vector<std::string> out;
    for (const auto& [club, c] : club_country_) {
        if (c == country) {
            out.push_back(club);
        }
    }
    return out;
}

Dataset parse_dataset(std::string_view csv) {
    std::vector<ParticipationRecord> records = parse_records(csv);
    const ValidationReport report = validate_dataset(records);
    if (!report.ok()) {
        std::string message = "invalid dataset: ";
        for (std::size_t i = 0; i < report.problems.size(); ++i) {
            if (i > 0) {
                message += "; ";
            }
            message += report.problems[i];
        }
        throw ValidationError(message);
    }
    return Dataset(std::move(records));
}

std::string serialize(const Dataset& dataset) {
    std::string out{kHeader};
    out += '\n';
    for (const auto& r : dataset.records()) {
        out += std::to_string(r.season);
        out += ',';
        out += r.club;
        out += ',';
        out += r.country;
        out += ',';
        out += stage_token(r.stage);
        out += '\n';
    }
    return out;
}

const Dataset& embedded_dataset() {
    static const Dataset data = parse_dataset(embedded_dataset_csv());
    return data;
}

}  // namespace kb

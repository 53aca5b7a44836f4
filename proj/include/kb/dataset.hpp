#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kb/stage.hpp"

namespace kb {

/// One club reaching one knockout stage in one season. `season` is the year
/// of the final (2004 season = campaign finishing in 2004).
struct ParticipationRecord {
    int season = 0;
    std::string club;
    std::string country;
    Stage stage = Stage::R16;

    friend bool operator==(const ParticipationRecord&, const ParticipationRecord&) = default;
};

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/// Immutable, canonically ordered collection of participation records with
/// lookup indexes. Construction sorts by (season, club).
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<ParticipationRecord> records);

    const std::vector<ParticipationRecord>& records() const { return records_; }
    const std::vector<int>& seasons() const { return seasons_; }
    const std::vector<std::string>& clubs() const { return clubs_; }
    const std::vector<std::string>& countries() const { return countries_; }

    bool has_club(std::string_view club) const;
    bool has_country(std::string_view country) const;

    /// Country of a club (first occurrence wins). Throws UnknownClubError.
    const std::string& country_of(std::string_view club) const;

    /// Stage reached by `club` in `season`, or nullopt if it did not reach
    /// the knockout phase that season.
    std::optional<Stage> stage_of(int season, std::string_view club) const;

    /// All (season, stage) participations of a club, season-ascending.
    std::vector<std::pair<int, Stage>> participations_of_club(std::string_view club) const;

    /// All (season, stage) participations of a country's clubs,
    /// season-ascending (one entry per club-season).
    std::vector<std::pair<int, Stage>> participations_of_country(std::string_view country) const;

    /// Clubs of one country, sorted by name. Throws UnknownCountryError.
    std::vector<std::string> clubs_of_country(std::string_view country) const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<ParticipationRecord> records_;
    std::vector<int> seasons_;
    std::vector<std::string> clubs_;
    std::vector<std::string> countries_;
    std::map<std::string, std::string, std::less<>> club_country_;
};

/// Parses the CSV format without semantic validation. Throws SyntaxError
/// (with a 1-based line number) for malformed input. The header line
/// `season,club,country,stage` is required; blank lines are skipped.
std::vector<ParticipationRecord> parse_records(std::string_view csv);

/// Checks tournament-shape constraints: each season has exactly one W, one F,
/// two SF, four QF and eight R16 records; no duplicate (season, club); no
/// club mapped to two countries.
ValidationReport validate_dataset(const std::vector<ParticipationRecord>& records);

/// parse_records + validate_dataset; throws ValidationError listing every
/// problem when validation fails.
Dataset parse_dataset(std::string_view csv);

/// Canonical CSV serialization (header, records sorted by (season, club),
/// LF line endings).
std::string serialize(const Dataset& dataset);

/// The bundled 2003/04 through 2018/19 Champions League knockout dataset.
const Dataset& embedded_dataset();

/// Raw CSV text of the bundled dataset (identical to the shipped data file).
const std::string& embedded_dataset_csv();

}  // namespace kb

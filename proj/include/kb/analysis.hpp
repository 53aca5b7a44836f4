#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kb/dataset.hpp"
#include "kb/indices.hpp"
#include "kb/score_vector.hpp"
#include "kb/weights.hpp"
#include "kb/windows.hpp"

namespace kb {

/// Which entities compete for shares in a concentration analysis.
struct EntityScope {
    enum class Kind {
        Clubs,          ///< every club is its own entity
        Countries,      ///< clubs pooled by country
        TwoGroups,      ///< a named group of countries vs everyone else
        WithinCountry,  ///< the clubs of a single country
    };

    Kind kind = Kind::Clubs;
    std::vector<std::string> group;  ///< member countries (TwoGroups)
    std::string group_label = "group";
    std::string country;  ///< focal country (WithinCountry)

    static EntityScope clubs();
    static EntityScope countries();
    static EntityScope two_groups(std::vector<std::string> members, std::string label);
    static EntityScope within_country(std::string country);
};

/// England, France, Germany, Italy, Spain.
extern const std::vector<std::string> kTopFiveCountries;

/// Weighted score vector of one club over a window: one entry per season in
/// the window (zero when the club did not reach the knockout phase).
ScoreVector club_vector(const Dataset& data, std::string_view club, const Window& window,
                        const WeightScheme& scheme);

/// Weighted score vector of one country over a window: one entry per
/// club-season participation of that country's clubs inside the window.
ScoreVector country_vector(const Dataset& data, std::string_view country, const Window& window,
                           const WeightScheme& scheme);

/// Country vector of a set of countries pooled together.
ScoreVector group_vector(const Dataset& data, const std::vector<std::string>& members,
                         const Window& window, const WeightScheme& scheme);

/// Display names of the entities a scope produces, sorted (TwoGroups keeps
/// the group label first, then "other").
std::vector<std::string> entity_names(const Dataset& data, const EntityScope& scope);

/// Score vector per entity, keyed by entity name.
std::map<std::string, ScoreVector> entity_vectors(const Dataset& data, const EntityScope& scope,
                                                  const Window& window,
                                                  const WeightScheme& scheme);

struct ShareTable {
    IndexKind kind = IndexKind::Euclidean;
    std::string scheme;
    std::map<std::string, double> share;  ///< entity -> fraction of the index total
};

/// Normalized index values: share(e) = f(x_e) / sum over entities. Throws
/// AllZeroError when every entity's index value is zero.
ShareTable shares(const std::map<std::string, ScoreVector>& vectors, IndexKind kind,
                  std::string scheme_name = {});

/// Herfindahl-Hirschman concentration of a share table: sum of squared shares.
double hhi(const ShareTable& table);

struct SeriesPoint {
    int label = 0;
    std::optional<double> value;  ///< nullopt = undefined for this window

    friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

struct Series {
    std::vector<SeriesPoint> points;  ///< label-ascending
};

/// HHI per rolling window. Windows whose entities are all zero yield a
/// missing point instead of a value.
Series balance_series(const Dataset& data, const EntityScope& scope, IndexKind kind,
                      const WeightScheme& scheme, std::size_t window_length);

/// One entity's share per rolling window. Throws UnknownEntityError when the
/// scope never produces `entity`. An entity absent from a window has share 0;
/// only windows where every entity is zero yield missing points.
Series share_series(const Dataset& data, const EntityScope& scope, std::string_view entity,
                    IndexKind kind, const WeightScheme& scheme, std::size_t window_length);

struct RankedEntry {
    std::size_t rank = 0;  ///< competition ranking: ties share the smaller rank
    std::string entity;
    double value = 0.0;

    friend bool operator==(const RankedEntry&, const RankedEntry&) = default;
};

struct RankedList {
    IndexKind kind = IndexKind::Euclidean;
    std::string scheme;
    std::vector<RankedEntry> entries;  ///< value-descending, ties by name
};

/// Ranks entities by index value (descending; exact value ties share a rank
/// and are listed alphabetically).
RankedList rank_entities(const std::map<std::string, ScoreVector>& vectors, IndexKind kind,
                         std::string scheme_name = {});

/// Convenience: rank a scope's entities over one window.
RankedList rank_entities(const Dataset& data, const EntityScope& scope, IndexKind kind,
                         const WeightScheme& scheme, const Window& window);

/// Entries whose rank is at most k (so a tie straddling the cutoff is kept
/// whole).
RankedList top_of(const RankedList& list, std::size_t k);

}  // namespace kb

#include "kb/analysis.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "kb/errors.hpp"

namespace kb {

EntityScope EntityScope::clubs() {
    EntityScope scope;
    scope.kind = Kind::Clubs;
    return scope;
}

EntityScope EntityScope::countries() {
    EntityScope scope;
    scope.kind = Kind::Countries;
    return scope;
}

EntityScope EntityScope::two_groups(std::vector<std::string> members, std::string label) {
    EntityScope scope;
    scope.kind = Kind::TwoGroups;
    scope.group = std::move(members);
    scope.group_label = std::move(label);
    return scope;
}

EntityScope EntityScope::within_country(std::string country) {
    EntityScope scope;
    scope.kind = Kind::WithinCountry;
    scope.country = std::move(country);
    return scope;
}

const std::vector<std::string> kTopFiveCountries = {"England", "France", "Germany", "Italy",
                                                    "Spain"};

ScoreVector club_vector(const Dataset& data, std::string_view club, const Window& window,
                        const WeightScheme& scheme) {
    if (!data.has_club(club)) {
        throw UnknownClubError("unknown club: " + std::string(club));
    }
    std::vector<double> entries;
    entries.reserve(window.length);
    for (int season = window.first_season; season <= window.last_season(); ++season) {
        const std::optional<Stage> stage = data.stage_of(season, club);
        entries.push_back(stage ? scheme.weight_of(*stage) : 0.0);
    }
    return ScoreVector(std::move(entries));
}

ScoreVector country_vector(const Dataset& data, std::string_view country, const Window& window,
                           const WeightScheme& scheme) {
    std::vector<double> entries;
    for (const auto& [season, stage] : data.participations_of_country(country)) {
        if (window.contains(season)) {
            entries.push_back(scheme.weight_of(stage));
        }
    }
    return ScoreVector(std::move(entries));
}

ScoreVector group_vector(const Dataset& data, const std::vector<std::string>& members,
                         const Window& window, const WeightScheme& scheme) {
    std::vector<double> entries;
    for (const auto& member : members) {
        const ScoreVector part = country_vector(data, member, window, scheme);
        entries.insert(entries.end(), part.entries().begin(), part.entries().end());
    }
    return ScoreVector(std::move(entries));
}

namespace {

std::vector<std::string> complement_countries(const Dataset& data,
                                              const std::vector<std::string>& members) {
    const std::set<std::string> member_set(members.begin(), members.end());
    std::vector<std::string> rest;
    for (const auto& country : data.countries()) {
        if (!member_set.contains(country)) {
            rest.push_back(country);
        }
    }
    return rest;
}

}  // namespace

std::vector<std::string> entity_names(const Dataset& data, const EntityScope& scope) {
    switch (scope.kind) {
        case EntityScope::Kind::Clubs:
            return data.clubs();
        case EntityScope::Kind::Countries:
            return data.countries();
        case EntityScope::Kind::TwoGroups:
            return {scope.group_label, "other"};
        case EntityScope::Kind::WithinCountry:
            return data.clubs_of_country(scope.country);
    }
    return {};
}

std::map<std::string, ScoreVector> entity_vectors(const Dataset& data, const EntityScope& scope,
                                                  const Window& window,
                                                  const WeightScheme& scheme) {
    std::map<std::string, ScoreVector> out;
    switch (scope.kind) {
        case EntityScope::Kind::Clubs:
            for (const auto& club : data.clubs()) {
                out.emplace(club, club_vector(data, club, window, scheme));
            }
            break;
        case EntityScope::Kind::Countries:
            for (const auto& country : data.countries()) {
                out.emplace(country, country_vector(data, country, window, scheme));
            }
            break;
        case EntityScope::Kind::TwoGroups: {
            for (const auto& member : scope.group) {
                if (!data.has_country(member)) {
                    throw UnknownCountryError("unknown country: " + member);
                }
            }
            out.emplace(scope.group_label, group_vector(data, scope.group, window, scheme));
            out.emplace("other", group_vector(data, complement_countries(data, scope.group),
                                              window, scheme));
            break;
        }
        case EntityScope::Kind::WithinCountry:
            for (const auto& club : data.clubs_of_country(scope.country)) {
                out.emplace(club, club_vector(data, club, window, scheme));
            }
            break;
    }
    return out;
}

ShareTable shares(const std::map<std::string, ScoreVector>& vectors, IndexKind kind,
                  std::string scheme_name) {
    double total = 0.0;
    std::map<std::string, double> values;
    for (const auto& [entity, vector] : vectors) {
        const double value = evaluate(kind, vector);
        values.emplace(entity, value);
        total += value;
    }
    if (total <= 0.0) {
        throw AllZeroError("every entity in scope has index value zero");
    }
    ShareTable table;
    table.kind = kind;
    table.scheme = std::move(scheme_name);
    for (const auto& [entity, value] : values) {
        table.share.emplace(entity, value / total);
    }
    return table;
}

double hhi(const ShareTable& table) {
    double total = 0.0;
    for (const auto& [entity, share] : table.share) {
        total += share * share;
    }
    return total;
}

Series balance_series(const Dataset& data, const EntityScope& scope, IndexKind kind,
                      const WeightScheme& scheme, std::size_t window_length) {
    Series series;
    for (const Window& window : rolling_windows(data.seasons(), window_length)) {
        SeriesPoint point;
        point.label = window.label();
        try {
            point.value = hhi(shares(entity_vectors(data, scope, window, scheme), kind));
        } catch (const AllZeroError&) {
            point.value = std::nullopt;
        }
        series.points.push_back(point);
    }
    return series;
}

Series share_series(const Dataset& data, const EntityScope& scope, std::string_view entity,
                    IndexKind kind, const WeightScheme& scheme, std::size_t window_length) {
    const std::vector<std::string> names = entity_names(data, scope);
    if (std::find(names.begin(), names.end(), entity) == names.end()) {
        throw UnknownEntityError("unknown entity for this scope: " + std::string(entity));
    }
    Series series;
    for (const Window& window : rolling_windows(data.seasons(), window_length)) {
        SeriesPoint point;
        point.label = window.label();
        try {
            const ShareTable table = shares(entity_vectors(data, scope, window, scheme), kind);
            point.value = table.share.at(std::string(entity));
        } catch (const AllZeroError&) {
            point.value = std::nullopt;
        }
        series.points.push_back(point);
    }
    return series;
}

RankedList rank_entities(const std::map<std::string, ScoreVector>& vectors, IndexKind kind,
                         std::string scheme_name) {
    RankedList list;
    list.kind = kind;
    list.scheme = std::move(scheme_name);
    for (const auto& [entity, vector] : vectors) {
        list.entries.push_back(RankedEntry{0, entity, evaluate(kind, vector)});
    }
    std::sort(list.entries.begin(), list.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.value != b.value) {
                      return a.value > b.value;
                  }
                  return a.entity < b.entity;
              });
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
        if (i > 0 && list.entries[i].value == list.entries[i - 1].value) {
            list.entries[i].rank = list.entries[i - 1].rank;
        } else {
            list.entries[i].rank = i + 1;
        }
    }
    return list;
}

RankedList rank_entities(const Dataset& data, const EntityScope& scope, IndexKind kind,
                         const WeightScheme& scheme, const Window& window) {
    return rank_entities(entity_vectors(data, scope, window, scheme), kind, scheme.name());
}

RankedList top_of(const RankedList& list, std::size_t k) {
    RankedList out;
    out.kind = list.kind;
    out.scheme = list.scheme;
    for (const auto& entry : list.entries) {
        if (entry.rank <= k) {
            out.entries.push_back(entry);
        }
    }
    return out;
}

}  // namespace kb

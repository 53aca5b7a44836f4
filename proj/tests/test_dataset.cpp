#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kb/dataset.hpp"
#include "kb/errors.hpp"
#include "kb/weights.hpp"

using kb::Dataset;
using kb::ParticipationRecord;
using kb::Stage;

namespace {

std::string asset_path() {
    return std::string(KB_TEST_DATA_DIR) + "/champions_league_2003_2019.csv";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("embedded dataset census") {
    const Dataset& data = kb::embedded_dataset();
    CHECK(data.records().size() == 256);
    CHECK(data.clubs().size() == 58);
    CHECK(data.countries().size() == 17);

    REQUIRE(data.seasons().size() == 16);
    CHECK(data.seasons().front() == 2003);
    CHECK(data.seasons().back() == 2018);
    for (std::size_t i = 0; i < data.seasons().size(); ++i) {
        CHECK(data.seasons()[i] == 2003 + static_cast<int>(i));
    }
}

TEST_CASE("embedded dataset spot checks") {
    const Dataset& data = kb::embedded_dataset();
    CHECK(data.stage_of(2003, "Porto") == Stage::W);
    CHECK(data.stage_of(2005, "Barcelona") == Stage::W);
    CHECK(data.stage_of(2011, "Chelsea") == Stage::W);
    CHECK(data.stage_of(2016, "Leicester City") == Stage::QF);
    CHECK(data.stage_of(2017, "Liverpool") == Stage::F);
    CHECK(data.stage_of(2018, "Ajax") == Stage::SF);
    CHECK(data.country_of("Ajax") == "Netherlands");
    CHECK(data.country_of("Porto") == "Portugal");
    CHECK_FALSE(data.stage_of(2005, "Porto").has_value());
    CHECK_FALSE(data.stage_of(1999, "Porto").has_value());
}

TEST_CASE("embedded dataset validates cleanly and round-trips") {
    const Dataset& data = kb::embedded_dataset();
    CHECK(kb::validate_dataset(data.records()).ok());

    const std::string csv = kb::serialize(data);
    const Dataset reparsed = kb::parse_dataset(csv);
    CHECK(reparsed == data);
}

TEST_CASE("embedded CSV equals the shipped asset byte for byte") {
    const std::string asset = read_file(asset_path());
    CHECK(kb::embedded_dataset_csv() == asset);
    CHECK(kb::serialize(kb::embedded_dataset()) == asset);
}

TEST_CASE("club and country lookups") {
    const Dataset& data = kb::embedded_dataset();
    CHECK(data.has_club("Porto"));
    CHECK_FALSE(data.has_club("Atlantis FC"));
    CHECK(data.has_country("Portugal"));
    CHECK_FALSE(data.has_country("Atlantis"));
    CHECK_THROWS_AS(data.country_of("Atlantis FC"), kb::UnknownClubError);
    CHECK_THROWS_AS(data.participations_of_club("Atlantis FC"), kb::UnknownClubError);
    CHECK_THROWS_AS(data.participations_of_country("Atlantis"), kb::UnknownCountryError);
    CHECK_THROWS_AS(data.clubs_of_country("Atlantis"), kb::UnknownCountryError);

    CHECK(data.participations_of_club("Porto").size() == 11);
    CHECK(data.clubs_of_country("Portugal") ==
          std::vector<std::string>{"Benfica", "Porto", "Sporting CP"});

    const auto leicester = data.participations_of_club("Leicester City");
    REQUIRE(leicester.size() == 1);
    CHECK(leicester[0] == std::pair<int, Stage>{2016, Stage::QF});
}

TEST_CASE("parser accepts the documented format") {
    const std::string csv =
        "season,club,country,stage\n"
        "2003,Porto,Portugal,W\n"
        "2003,Monaco,France,F\n";
    const std::vector<ParticipationRecord> records = kb::parse_records(csv);
    REQUIRE(records.size() == 2);
    CHECK(records[0].season == 2003);
    CHECK(records[0].club == "Porto");
    CHECK(records[0].country == "Portugal");
    CHECK(records[0].stage == Stage::W);
    CHECK(records[1].stage == Stage::F);
}

TEST_CASE("parser tolerates CRLF, blank lines, and a missing trailing newline") {
    const std::string csv =
        "season,club,country,stage\r\n"
        "\r\n"
        "2003,Porto,Portugal,W\r\n"
        "2003,Monaco,France,F";
    const std::vector<ParticipationRecord> records = kb::parse_records(csv);
    REQUIRE(records.size() == 2);
    CHECK(records[1].club == "Monaco");
}

TEST_CASE("parser reports the offending line") {
    auto line_of = [](const std::string& csv) -> std::size_t {
        try {
            kb::parse_records(csv);
        } catch (const kb::SyntaxError& e) {
            return e.line();
        }
        return 0;
    };

    CHECK(line_of("club,stage\n") == 1);
    CHECK(line_of("") == 1);
    CHECK(line_of("season,club,country,stage\n2003,Porto,Portugal,WINNER\n") == 2);
    CHECK(line_of("season,club,country,stage\n2003,Porto,Portugal\n") == 2);
    CHECK(line_of("season,club,country,stage\n2003,Porto,Portugal,W,extra\n") == 2);
    CHECK(line_of("season,club,country,stage\nMMIII,Porto,Portugal,W\n") == 2);
    CHECK(line_of("season,club,country,stage\n2003,,Portugal,W\n") == 2);
    CHECK(line_of("season,club,country,stage\n2003,Porto,,W\n") == 2);
    CHECK(line_of("season,club,country,stage\n2003,Porto,Portugal,W\n\n2004,,France,W\n") == 4);

    try {
        kb::parse_records("season,club,country,stage\n2003,Porto,Portugal,WINNER\n");
        FAIL("expected SyntaxError");
    } catch (const kb::SyntaxError& e) {
        CHECK(std::string(e.what()).find("WINNER") != std::string::npos);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parse-only mode loads structurally invalid data") {
    const std::string csv =
        "season,club,country,stage\n"
        "2003,Porto,Portugal,W\n"
        "2003,Monaco,France,W\n";
    CHECK(kb::parse_records(csv).size() == 2);
    CHECK_THROWS_AS(kb::parse_dataset(csv), kb::ValidationError);
}

TEST_CASE("validation reports stage multiplicity problems") {
    std::vector<ParticipationRecord> records;
    records.push_back({2003, "A", "X", Stage::W});
    records.push_back({2003, "B", "X", Stage::W});
    const kb::ValidationReport report = kb::validate_dataset(records);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& problem : report.problems) {
        if (problem.find("season 2003") != std::string::npos &&
            problem.find("stage W") != std::string::npos &&
            problem.find("count 2") != std::string::npos) {
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("validation reports duplicates and split countries") {
    std::vector<ParticipationRecord> records;
    records.push_back({2003, "Porto", "Portugal", Stage::W});
    records.push_back({2003, "Porto", "Portugal", Stage::R16});
    records.push_back({2004, "Porto", "Spain", Stage::QF});
    const kb::ValidationReport report = kb::validate_dataset(records);
    REQUIRE_FALSE(report.ok());

    bool duplicate_found = false;
    bool country_found = false;
    for (const auto& problem : report.problems) {
        if (problem.find("duplicate club Porto") != std::string::npos) {
            duplicate_found = true;
        }
        if (problem.find("multiple countries") != std::string::npos &&
            problem.find("Portugal") != std::string::npos &&
            problem.find("Spain") != std::string::npos) {
            country_found = true;
        }
    }
    CHECK(duplicate_found);
    CHECK(country_found);
}

TEST_CASE("dataset construction sorts records canonically") {
    std::vector<ParticipationRecord> records;
    records.push_back({2004, "B", "X", Stage::F});
    records.push_back({2003, "Z", "X", Stage::W});
    records.push_back({2003, "A", "X", Stage::SF});
    const Dataset data(records);
    CHECK(data.records()[0].club == "A");
    CHECK(data.records()[1].club == "Z");
    CHECK(data.records()[2].club == "B");
    CHECK(data.seasons() == std::vector<int>{2003, 2004});
}

TEST_CASE("stage tokens round-trip") {
    for (Stage s : kb::kAllStages) {
        const auto parsed = kb::parse_stage(kb::stage_token(s));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == s);
    }
    CHECK_FALSE(kb::parse_stage("GROUP").has_value());
    CHECK_FALSE(kb::parse_stage("w").has_value());
    CHECK(kb::expected_count(Stage::R16) == 8);
    CHECK(kb::expected_count(Stage::QF) == 4);
    CHECK(kb::expected_count(Stage::SF) == 2);
    CHECK(kb::expected_count(Stage::F) == 1);
    CHECK(kb::expected_count(Stage::W) == 1);
}

TEST_CASE("weight schemes") {
    CHECK(kb::preset_scheme("W1").weight_of(Stage::W) == 16);
    CHECK(kb::preset_scheme("W1").weight_of(Stage::R16) == 1);
    CHECK(kb::preset_scheme("W2").weight_of(Stage::F) == 4);
    CHECK(kb::preset_scheme("W3").weight_of(Stage::R16) == 2);
    CHECK(kb::preset_scheme("W4").weight_of(Stage::QF) == 1);
    CHECK_THROWS_AS(kb::preset_scheme("W9"), kb::UnknownSchemeError);
    CHECK_THROWS_AS(kb::preset_scheme(""), kb::UnknownSchemeError);

    const kb::WeightScheme custom("mine", 10, 6, 2, 1, 0.5);
    CHECK(custom.weight_of(Stage::W) == 10);
    CHECK(custom.weight_of(Stage::R16) == 0.5);
    CHECK(custom.name() == "mine");
    CHECK_THROWS_AS(kb::WeightScheme("bad", -1, 0, 0, 0, 0), kb::NegativeScoreError);

    const kb::WeightScheme doubled = kb::preset_scheme("W2").scaled(2.0);
    CHECK(doubled.weight_of(Stage::W) == 10);
    CHECK(doubled.weight_of(Stage::R16) == 2);
    CHECK_THROWS_AS(kb::preset_scheme("W2").scaled(0.0), kb::NonPositiveScaleError);
}

#pragma once

// Serialization of cabling sequences and classifications: the canonical
// text rendering, JSON objects and CSV rows.

#include "torus_tunnels/cabling.hpp"
#include "torus_tunnels/classification.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace torus_tunnels {

struct ClassificationSummary {
    CaseLabel case_label = CaseLabel::III;
    int distinct_count = 3;

    friend bool operator==(const ClassificationSummary&, const ClassificationSummary&) = default;
};

/// One tunnel of one knot, with (p,q) exactly as the user gave them.
struct OutputRecord {
    BigInt p;
    BigInt q;
    TunnelKind tunnel = TunnelKind::middle;
    SimpleSlope simple_slope;
    std::vector<BigInt> slopes;
    std::vector<std::uint8_t> binaries;
    std::vector<KnotPair> intermediates;
    std::optional<ClassificationSummary> classification;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const BigInt& p, const BigInt& q, const CablingSequence& seq,
                         std::optional<ClassificationSummary> classification = std::nullopt);

// Text: "[1/3], 5, 17", "[1, 0, 1]", "(3,2), (4,3)".
std::string render_slopes(const SimpleSlope& simple, const std::vector<BigInt>& slopes);
std::string render_binaries(const std::vector<std::uint8_t>& binaries);
std::string render_intermediates(const std::vector<KnotPair>& intermediates);
/// e.g. "case II: 2 distinct tunnels (middle = upper; lower distinct)".
std::string render_classification(const TunnelClassification& c);

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise; both forms are accepted when reading.
nlohmann::json bigint_to_json(const BigInt& value);
BigInt bigint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OutputRecord& record);
/// Throws std::invalid_argument on a malformed document.
OutputRecord record_from_json(const nlohmann::json& j);

nlohmann::json classification_to_json(const BigInt& p, const BigInt& q, const TunnelClassification& c);

/// p,q,tunnel,simple_slope,slopes,binaries,case,distinct_count
std::string csv_header();
std::string csv_row(const OutputRecord& record);

}  // namespace torus_tunnels

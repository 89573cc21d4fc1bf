#include "torus_tunnels/record.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

namespace torus_tunnels {

namespace {

template <typename Range, typename Fn>
std::string join(const Range& items, std::string_view sep, Fn&& fn) {
    std::ostringstream os;
    bool first = true;
    for (const auto& item : items) {
        if (!first) os << sep;
        first = false;
        fn(os, item);
    }
    return os.str();
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("record is missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

OutputRecord make_record(const BigInt& p, const BigInt& q, const CablingSequence& seq,
                         std::optional<ClassificationSummary> classification) {
    return {p, q, seq.kind, seq.simple_slope, seq.slopes, seq.binaries, seq.intermediates, classification};
}

std::string render_slopes(const SimpleSlope& simple, const std::vector<BigInt>& slopes) {
    std::ostringstream os;
    os << simple;
    for (const BigInt& m : slopes) os << ", " << m;
    return os.str();
}

std::string render_binaries(const std::vector<std::uint8_t>& binaries) {
    return "[" + join(binaries, ", ", [](std::ostream& os, std::uint8_t s) { os << int(s); }) + "]";
}

std::string render_intermediates(const std::vector<KnotPair>& intermediates) {
    return join(intermediates, ", ",
                [](std::ostream& os, const KnotPair& k) { os << format_pair(k.p, k.q); });
}

std::string render_classification(const TunnelClassification& c) {
    std::ostringstream os;
    os << "case " << to_string(c.case_label) << ": " << c.distinct_count << " distinct tunnel"
       << (c.distinct_count == 1 ? "" : "s");
    if (c.distinct_count == 3) return os.str();

    std::vector<std::string> parts;
    for (const auto& cls : c.coincidences) {
        if (cls.size() > 1)
            parts.push_back(join(cls, " = ", [](std::ostream& o, TunnelKind k) { o << to_string(k); }));
        else
            parts.push_back(std::string(to_string(cls.front())) + " distinct");
    }
    os << " (" << join(parts, "; ", [](std::ostream& o, const std::string& s) { o << s; }) << ")";
    return os.str();
}

nlohmann::json bigint_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(value);
    return value.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["p"] = bigint_to_json(r.p);
    j["q"] = bigint_to_json(r.q);
    j["tunnel"] = std::string(to_string(r.tunnel));
    j["simple_slope"] = {{"num", bigint_to_json(r.simple_slope.num())},
                         {"den", bigint_to_json(r.simple_slope.den())}};
    j["slopes"] = nlohmann::json::array();
    for (const BigInt& m : r.slopes) j["slopes"].push_back(bigint_to_json(m));
    j["binaries"] = nlohmann::json::array();
    for (std::uint8_t s : r.binaries) j["binaries"].push_back(int(s));
    j["intermediates"] = nlohmann::json::array();
    for (const KnotPair& k : r.intermediates)
        j["intermediates"].push_back({bigint_to_json(k.p), bigint_to_json(k.q)});
    if (r.classification) {
        j["case"] = std::string(to_string(r.classification->case_label));
        j["distinct_count"] = r.classification->distinct_count;
    }
    return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
    try {
        OutputRecord r;
        r.p = bigint_from_json(require(j, "p"));
        r.q = bigint_from_json(require(j, "q"));
        r.tunnel = parse_tunnel_kind(require(j, "tunnel").get<std::string>());
        const auto& simple = require(j, "simple_slope");
        r.simple_slope = SimpleSlope(bigint_from_json(require(simple, "num")), bigint_from_json(require(simple, "den")));
        for (const auto& m : require(j, "slopes")) r.slopes.push_back(bigint_from_json(m));
        for (const auto& s : require(j, "binaries")) {
            const int bit = s.get<int>();
            if (bit != 0 && bit != 1) throw std::invalid_argument("binary invariant must be 0 or 1");
            r.binaries.push_back(static_cast<std::uint8_t>(bit));
        }
        for (const auto& k : require(j, "intermediates")) {
            if (!k.is_array() || k.size() != 2) throw std::invalid_argument("intermediate must be a pair");
            r.intermediates.push_back({bigint_from_json(k[0]), bigint_from_json(k[1])});
        }
        if (j.contains("case")) {
            r.classification = ClassificationSummary{parse_case_label(j.at("case").get<std::string>()),
                                                     require(j, "distinct_count").get<int>()};
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

nlohmann::json classification_to_json(const BigInt& p, const BigInt& q, const TunnelClassification& c) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : c.coincidences) {
        nlohmann::json names = nlohmann::json::array();
        for (TunnelKind k : cls) names.push_back(std::string(to_string(k)));
        classes.push_back(std::move(names));
    }
    return {{"p", bigint_to_json(p)},
            {"q", bigint_to_json(q)},
            {"case", std::string(to_string(c.case_label))},
            {"distinct_count", c.distinct_count},
            {"classes", std::move(classes)}};
}

std::string csv_header() { return "p,q,tunnel,simple_slope,slopes,binaries,case,distinct_count"; }

std::string csv_row(const OutputRecord& r) {
    std::ostringstream os;
    os << r.p << ',' << r.q << ',' << to_string(r.tunnel) << ',' << r.simple_slope.num() << '/'
       << r.simple_slope.den() << ','
       << join(r.slopes, ";", [](std::ostream& o, const BigInt& m) { o << m; }) << ','
       << join(r.binaries, ";", [](std::ostream& o, std::uint8_t s) { o << int(s); }) << ',';
    if (r.classification) os << to_string(r.classification->case_label) << ',' << r.classification->distinct_count;
    else os << ',';
    return os.str();
}

}  // namespace torus_tunnels

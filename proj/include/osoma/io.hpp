#ifndef OSOMA_IO_HPP
#define OSOMA_IO_HPP

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "osoma/cost_matrix.hpp"
#include "osoma/dynamic.hpp"
#include "osoma/errors.hpp"

namespace osoma {

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ValidationError("not a number: '" + text + "'");
    }
    return value;
}

inline std::uint64_t parse_u64(const std::string& text) {
    std::uint64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ValidationError("not a non-negative integer: '" + text + "'");
    }
    return value;
}

namespace detail {

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

inline nlohmann::json parse_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ValidationError(path + ": " + err.what());
    }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

/// Splits into lines, requires the given header on the first one.
inline std::vector<std::string> csv_body_lines(const std::string& text, const std::string& header,
                                               const std::string& origin) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(current);
    if (lines.empty() || lines.front() != header) {
        throw ValidationError(origin + ": expected header '" + header + "'");
    }
    lines.erase(lines.begin());
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Problem instances

struct TspInstance {
    DynamicCostMatrix matrix{{"a", "b"}, {0, 1, 1, 0}};
    std::vector<std::string> labels;
    bool directed = false;
};

inline nlohmann::json instance_to_json(const TspInstance& instance) {
    nlohmann::json cities = nlohmann::json::array();
    const auto& ids = instance.matrix.city_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        cities.push_back({{"id", ids[i]},
                          {"label", i < instance.labels.size() ? instance.labels[i] : ids[i]}});
    }
    nlohmann::json costs = nlohmann::json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < ids.size(); ++j) {
            row.push_back(i == j ? 0.0
                                 : instance.matrix.cost(static_cast<int>(i), static_cast<int>(j)));
        }
        costs.push_back(row);
    }
    return {{"cities", cities}, {"costs", costs}, {"directed", instance.directed}};
}

inline TspInstance instance_from_json(const nlohmann::json& doc, const std::string& origin) {
    const auto fail = [&](const std::string& msg) -> void {
        throw ValidationError(origin + ": " + msg);
    };
    if (!doc.is_object()) fail("instance must be a JSON object");
    if (!doc.contains("cities") || !doc["cities"].is_array()) fail("missing 'cities' array");
    if (!doc.contains("costs") || !doc["costs"].is_array()) fail("missing 'costs' array");

    std::vector<std::string> ids;
    std::vector<std::string> labels;
    for (const auto& c : doc["cities"]) {
        if (!c.is_object() || !c.contains("id") || !c["id"].is_string()) {
            fail("each city needs a string 'id'");
        }
        ids.push_back(c["id"].get<std::string>());
        labels.push_back(c.contains("label") && c["label"].is_string()
                             ? c["label"].get<std::string>()
                             : ids.back());
    }
    const std::size_t n = ids.size();
    if (n < 2) fail("instance needs at least two cities");

    const auto& costs = doc["costs"];
    if (costs.size() != n) fail("'costs' must have one row per city");
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!costs[i].is_array() || costs[i].size() != n) {
            fail("costs row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!costs[i][j].is_number()) {
                fail("costs[" + std::to_string(i) + "][" + std::to_string(j) + "] is not a number");
            }
            const double v = costs[i][j].get<double>();
            if (i == j && v != 0.0) {
                fail("diagonal entry [" + std::to_string(i) + "] must be 0");
            }
            flat.push_back(v);
        }
    }

    TspInstance instance;
    instance.directed = doc.value("directed", false);
    instance.labels = std::move(labels);
    try {
        instance.matrix = DynamicCostMatrix(ids, flat);
    } catch (const Error& err) {
        fail(err.what());
    }
    if (!instance.directed && !instance.matrix.is_symmetric()) {
        fail("undirected instance has an asymmetric cost matrix");
    }
    return instance;
}

inline TspInstance read_instance(const std::string& path) {
    return instance_from_json(detail::parse_json_file(path), path);
}

inline void write_instance(const std::string& path, const TspInstance& instance) {
    detail::write_text_file(path, instance_to_json(instance).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Event schedules

inline nlohmann::json schedule_to_json(const EventSchedule& schedule) {
    nlohmann::json events = nlohmann::json::array();
    for (const auto& ev : schedule.events) {
        nlohmann::json item;
        item["at"] = ev.at_iteration;
        if (const auto* add = std::get_if<AddCityEvent>(&ev.payload)) {
            item["kind"] = "add_city";
            item["city"] = {{"id", add->id}, {"label", add->label}};
            item["row"] = add->costs_from_new;
            item["col"] = add->costs_to_new;
        } else {
            const auto& upd = std::get<UpdateEdgesEvent>(ev.payload);
            item["kind"] = "update_edges";
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& e : upd.edges) {
                edges.push_back({{"from", e.from}, {"to", e.to}, {"cost", e.cost}});
            }
            item["edges"] = edges;
        }
        events.push_back(item);
    }
    return {{"events", events}};
}

inline EventSchedule schedule_from_json(const nlohmann::json& doc, const std::string& origin) {
    const auto fail = [&](const std::string& msg) -> void {
        throw ValidationError(origin + ": " + msg);
    };
    if (!doc.is_object() || !doc.contains("events") || !doc["events"].is_array()) {
        fail("schedule must be an object with an 'events' array");
    }
    EventSchedule schedule;
    std::size_t idx = 0;
    for (const auto& item : doc["events"]) {
        const std::string where = "events[" + std::to_string(idx++) + "]";
        if (!item.is_object()) fail(where + " must be an object");
        if (!item.contains("at") || !item["at"].is_number_unsigned()) {
            fail(where + " needs a non-negative integer 'at'");
        }
        if (!item.contains("kind") || !item["kind"].is_string()) {
            fail(where + " needs a string 'kind'");
        }
        Event ev;
        ev.at_iteration = item["at"].get<std::size_t>();
        const std::string kind = item["kind"].get<std::string>();
        if (kind == "add_city") {
            if (!item.contains("city") || !item["city"].is_object() ||
                !item["city"].contains("id") || !item["city"]["id"].is_string()) {
                fail(where + " needs a 'city' object with a string 'id'");
            }
            if (!item.contains("row") || !item["row"].is_array() || !item.contains("col") ||
                !item["col"].is_array()) {
                fail(where + " needs 'row' and 'col' cost arrays");
            }
            AddCityEvent add;
            add.id = item["city"]["id"].get<std::string>();
            add.label = item["city"].value("label", add.id);
            for (const auto& v : item["row"]) {
                if (!v.is_number()) fail(where + ".row entries must be numbers");
                add.costs_from_new.push_back(v.get<double>());
            }
            for (const auto& v : item["col"]) {
                if (!v.is_number()) fail(where + ".col entries must be numbers");
                add.costs_to_new.push_back(v.get<double>());
            }
            ev.payload = std::move(add);
        } else if (kind == "update_edges") {
            if (!item.contains("edges") || !item["edges"].is_array() || item["edges"].empty()) {
                fail(where + " needs a non-empty 'edges' array");
            }
            UpdateEdgesEvent upd;
            for (const auto& e : item["edges"]) {
                if (!e.is_object() || !e.contains("from") || !e["from"].is_string() ||
                    !e.contains("to") || !e["to"].is_string() || !e.contains("cost") ||
                    !e["cost"].is_number()) {
                    fail(where + ".edges entries need 'from', 'to', and numeric 'cost'");
                }
                upd.edges.push_back(
                    {e["from"].get<std::string>(), e["to"].get<std::string>(),
                     e["cost"].get<double>()});
            }
            ev.payload = std::move(upd);
        } else {
            fail(where + " has unknown kind '" + kind + "'");
        }
        schedule.events.push_back(std::move(ev));
    }
    return schedule;
}

inline EventSchedule read_schedule(const std::string& path) {
    return schedule_from_json(detail::parse_json_file(path), path);
}

inline void write_schedule(const std::string& path, const EventSchedule& schedule) {
    detail::write_text_file(path, schedule_to_json(schedule).dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// Benchmark result tables

struct SummaryRow {
    std::string algorithm;
    std::string function;
    std::size_t dimension = 0;
    std::string seed;        // decimal seed, or "mean"/"median" for aggregates
    double final_fitness = 0.0;
    std::string iterations;  // decimal count; empty on aggregate rows
};

inline constexpr const char* kSummaryHeader = "algorithm,function,dimension,seed,final_fitness,iterations";

inline std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
    std::string out = std::string(kSummaryHeader) + "\n";
    for (const auto& r : rows) {
        out += r.algorithm + "," + r.function + "," + std::to_string(r.dimension) + "," + r.seed +
               "," + format_double(r.final_fitness) + "," + r.iterations + "\n";
    }
    return out;
}

inline std::vector<SummaryRow> summary_from_csv(const std::string& text,
                                                const std::string& origin) {
    std::vector<SummaryRow> rows;
    for (const auto& line : detail::csv_body_lines(text, kSummaryHeader, origin)) {
        const auto f = detail::split_csv_line(line);
        if (f.size() != 6) throw ValidationError(origin + ": bad row '" + line + "'");
        SummaryRow r;
        r.algorithm = f[0];
        r.function = f[1];
        r.dimension = static_cast<std::size_t>(parse_u64(f[2]));
        r.seed = f[3];
        r.final_fitness = parse_double(f[4]);
        r.iterations = f[5];
        rows.push_back(std::move(r));
    }
    return rows;
}

struct ConvergenceRow {
    std::string algorithm;
    std::string function;
    std::size_t dimension = 0;
    std::uint64_t seed = 0;
    std::size_t iteration = 0;
    double best_fitness = 0.0;
};

inline constexpr const char* kConvergenceHeader =
    "algorithm,function,dimension,seed,iteration,best_fitness";

inline std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = std::string(kConvergenceHeader) + "\n";
    for (const auto& r : rows) {
        out += r.algorithm + "," + r.function + "," + std::to_string(r.dimension) + "," +
               std::to_string(r.seed) + "," + std::to_string(r.iteration) + "," +
               format_double(r.best_fitness) + "\n";
    }
    return out;
}

inline std::vector<ConvergenceRow> convergence_from_csv(const std::string& text,
                                                        const std::string& origin) {
    std::vector<ConvergenceRow> rows;
    for (const auto& line : detail::csv_body_lines(text, kConvergenceHeader, origin)) {
        const auto f = detail::split_csv_line(line);
        if (f.size() != 6) throw ValidationError(origin + ": bad row '" + line + "'");
        ConvergenceRow r;
        r.algorithm = f[0];
        r.function = f[1];
        r.dimension = static_cast<std::size_t>(parse_u64(f[2]));
        r.seed = parse_u64(f[3]);
        r.iteration = static_cast<std::size_t>(parse_u64(f[4]));
        r.best_fitness = parse_double(f[5]);
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Dynamic scenario outputs

struct HistoryRow {
    std::size_t iteration = 0;
    std::string algorithm;
    double best_cost = 0.0;
    std::string event;
};

inline constexpr const char* kHistoryHeader = "iteration,algorithm,best_cost,event";

inline std::string history_to_csv(const std::vector<HistoryRow>& rows) {
    std::string out = std::string(kHistoryHeader) + "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.iteration) + "," + r.algorithm + "," + format_double(r.best_cost) +
               "," + r.event + "\n";
    }
    return out;
}

inline std::vector<HistoryRow> history_from_csv(const std::string& text,
                                                const std::string& origin) {
    std::vector<HistoryRow> rows;
    for (const auto& line : detail::csv_body_lines(text, kHistoryHeader, origin)) {
        const auto f = detail::split_csv_line(line);
        if (f.size() != 4) throw ValidationError(origin + ": bad row '" + line + "'");
        HistoryRow r;
        r.iteration = static_cast<std::size_t>(parse_u64(f[0]));
        r.algorithm = f[1];
        r.best_cost = parse_double(f[2]);
        r.event = f[3];
        rows.push_back(std::move(r));
    }
    return rows;
}

struct TourRecord {
    std::string algorithm;
    double cost = 0.0;
    std::vector<std::string> tour;  // city ids in visiting order
};

inline nlohmann::json tour_record_to_json(const TourRecord& record) {
    return {{"algorithm", record.algorithm}, {"cost", record.cost}, {"tour", record.tour}};
}

inline TourRecord tour_record_from_json(const nlohmann::json& doc, const std::string& origin) {
    if (!doc.is_object() || !doc.contains("algorithm") || !doc["algorithm"].is_string() ||
        !doc.contains("cost") || !doc["cost"].is_number() || !doc.contains("tour") ||
        !doc["tour"].is_array()) {
        throw ValidationError(origin + ": expected {algorithm, cost, tour}");
    }
    TourRecord record;
    record.algorithm = doc["algorithm"].get<std::string>();
    record.cost = doc["cost"].get<double>();
    for (const auto& c : doc["tour"]) {
        if (!c.is_string()) throw ValidationError(origin + ": tour entries must be city ids");
        record.tour.push_back(c.get<std::string>());
    }
    return record;
}

inline TourRecord read_tour_record(const std::string& path) {
    return tour_record_from_json(detail::parse_json_file(path), path);
}

inline void write_tour_record(const std::string& path, const TourRecord& record) {
    detail::write_text_file(path, tour_record_to_json(record).dump(2) + "\n");
}

} // namespace osoma

#endif

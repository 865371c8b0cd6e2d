#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

namespace henon {

inline constexpr int kSchemaVersion = 1;

/// One record of the run event stream. Fields not meaningful for a given
/// type stay unset and are omitted from the serialized line.
struct Event {
    int step = 0;
    std::string slot;
    int64_t elem = -1;
    int64_t parent = -1;
    std::string type;  // created | escape | essential-return | inessential-return |
                       // bound-return | excluded | interaction-deleted | monotone-split |
                       // deep-cut | glue | eg-check | falsification | note
    double lo = 0.0, hi = 0.0;
    bool has_interval = false;
    int r = 0, m = 0;
    bool has_depth = false;
    double d_lo = 0.0, d_hi = 0.0;  // realized |x - zeta_x| range over the element
    int binding = 0;                // binding period, 0 when absent
    double dist = 0.0;              // capture distance d
    bool has_binding = false;
    long long e_sum = -1, r_sum = -1;
    std::string cause;
    double value = 0.0;
    bool has_value = false;

    std::string to_json_line() const;
};

class EventSink {
public:
    virtual ~EventSink() = default;
    virtual void emit(const Event& ev) = 0;
    virtual void flush() {}
};

class NullSink final : public EventSink {
public:
    void emit(const Event&) override {}
};

class VectorSink final : public EventSink {
public:
    void emit(const Event& ev) override { events.push_back(ev); }
    std::vector<Event> events;
};

class FileSink final : public EventSink {
public:
    explicit FileSink(const std::string& path);
    void emit(const Event& ev) override;
    void flush() override;

private:
    std::ofstream out_;
};

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double v);

/// Reads back an events.jsonl file (used by the audit CLI path).
std::vector<Event> read_events_file(const std::string& path);

/// Parses one serialized event line.
Event parse_event_line(const std::string& line);

}  // namespace henon

#include "henon/events.hpp"

#include <array>
#include <stdexcept>

#include <json.hpp>

namespace henon {

std::string format_double(double v) {
    std::array<char, 40> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string Event::to_json_line() const {
    std::string s;
    s.reserve(192);
    s += "{\"v\":1,\"step\":";
    s += std::to_string(step);
    s += ",\"slot\":\"";
    s += slot;
    s += "\",\"elem\":";
    s += std::to_string(elem);
    if (parent >= 0) {
        s += ",\"parent\":";
        s += std::to_string(parent);
    }
    s += ",\"type\":\"";
    s += type;
    s += '"';
    if (has_interval) {
        s += ",\"lo\":";
        s += format_double(lo);
        s += ",\"hi\":";
        s += format_double(hi);
    }
    if (has_depth) {
        s += ",\"r\":";
        s += std::to_string(r);
        s += ",\"m\":";
        s += std::to_string(m);
        s += ",\"d_lo\":";
        s += format_double(d_lo);
        s += ",\"d_hi\":";
        s += format_double(d_hi);
    }
    if (has_binding) {
        s += ",\"p\":";
        s += std::to_string(binding);
        s += ",\"d\":";
        s += format_double(dist);
    }
    if (e_sum >= 0) {
        s += ",\"E\":";
        s += std::to_string(e_sum);
        s += ",\"R\":";
        s += std::to_string(r_sum);
    }
    if (!cause.empty()) {
        s += ",\"cause\":\"";
        s += cause;
        s += '"';
    }
    if (has_value) {
        s += ",\"value\":";
        s += format_double(value);
    }
    s += '}';
    return s;
}

FileSink::FileSink(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open event stream: " + path);
}

void FileSink::emit(const Event& ev) {
    out_ << ev.to_json_line() << '\n';
}

void FileSink::flush() { out_.flush(); }

Event parse_event_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    Event ev;
    ev.step = j.at("step").get<int>();
    ev.slot = j.at("slot").get<std::string>();
    ev.elem = j.at("elem").get<int64_t>();
    ev.parent = j.value("parent", int64_t{-1});
    ev.type = j.at("type").get<std::string>();
    if (j.contains("lo")) {
        ev.lo = j["lo"].get<double>();
        ev.hi = j["hi"].get<double>();
        ev.has_interval = true;
    }
    if (j.contains("r")) {
        ev.r = j["r"].get<int>();
        ev.m = j.value("m", 0);
        ev.d_lo = j.value("d_lo", 0.0);
        ev.d_hi = j.value("d_hi", 0.0);
        ev.has_depth = true;
    }
    if (j.contains("p")) {
        ev.binding = j["p"].get<int>();
        ev.dist = j.value("d", 0.0);
        ev.has_binding = true;
    }
    ev.e_sum = j.value("E", int64_t{-1});
    ev.r_sum = j.value("R", int64_t{-1});
    ev.cause = j.value("cause", std::string{});
    if (j.contains("value")) {
        ev.value = j["value"].get<double>();
        ev.has_value = true;
    }
    return ev;
}

std::vector<Event> read_events_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read event stream: " + path);
    std::vector<Event> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_event_line(line));
    }
    return out;
}

}  // namespace henon

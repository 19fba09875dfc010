#include "hypertsp/io.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hypertsp {

using nlohmann::json;

std::string format_exact(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_length(double v) {
    if (!std::isfinite(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

double parse_decimal(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || s.empty())
        throw ParseError("invalid decimal number '" + s + "'");
    if (!std::isfinite(v)) throw ParseError("non-finite number '" + s + "'");
    return v;
}

namespace {

double number_field(const json& j, const char* what) {
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    if (j.is_number()) return j.get<double>();
    throw ParseError(std::string(what) + " must be a decimal string");
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

std::string instance_to_json(const Instance& inst) {
    json pts = json::array();
    for (const auto& p : inst.points()) pts.push_back({format_exact(p.x()), format_exact(p.y())});
    json doc = {{"model", "poincare"}, {"alpha", format_exact(inst.alpha())}, {"points", pts}};
    return doc.dump(1) + "\n";
}

Instance instance_from_json(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("instance must be a JSON object");
    if (!doc.contains("model") || doc["model"] != "poincare")
        throw ParseError("instance model must be \"poincare\"");
    if (!doc.contains("alpha")) throw ParseError("missing alpha");
    if (!doc.contains("points") || !doc["points"].is_array()) throw ParseError("missing points array");
    const double alpha = number_field(doc["alpha"], "alpha");
    std::vector<PoincarePoint> pts;
    for (const auto& p : doc["points"]) {
        if (!p.is_array() || p.size() != 2) throw ParseError("each point must be a pair [x, y]");
        try {
            pts.emplace_back(number_field(p[0], "coordinate"), number_field(p[1], "coordinate"));
        } catch (const DomainError& e) {
            throw ParseError(std::string("invalid point: ") + e.what());
        }
    }
    try {
        return Instance(std::move(pts), alpha);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

std::string result_to_json(const SolveResult& r) {
    json tour = json::array();
    for (Index i : r.tour.order) tour.push_back(i);
    const SolveStats& s = r.stats;
    json stats = {{"nodes", s.nodes},
                  {"leaves", s.leaves},
                  {"branches", s.branches},
                  {"matchings", s.matchings},
                  {"memo_hits", s.memo_hits},
                  {"boundary_checks", s.boundary_checks},
                  {"boundary_violations", s.boundary_violations},
                  {"max_boundary", s.max_boundary},
                  {"time_ms", s.time_ms}};
    json doc = {{"length", format_length(r.length)},
                {"tour", tour},
                {"algorithm", r.algorithm},
                {"stats", stats}};
    return doc.dump(1) + "\n";
}

ResultDocument result_from_json(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw ParseError("result must be a JSON object");
    ResultDocument out;
    if (!doc.contains("length")) throw ParseError("missing length");
    out.length = number_field(doc["length"], "length");
    out.length_text = doc["length"].is_string() ? doc["length"].get<std::string>() : doc["length"].dump();
    if (!doc.contains("tour") || !doc["tour"].is_array()) throw ParseError("missing tour array");
    for (const auto& v : doc["tour"]) {
        if (!v.is_number_integer()) throw ParseError("tour entries must be integers");
        out.tour.push_back(v.get<long long>());
    }
    if (doc.contains("algorithm") && doc["algorithm"].is_string()) out.algorithm = doc["algorithm"];
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace hypertsp

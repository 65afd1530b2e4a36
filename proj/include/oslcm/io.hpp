#ifndef OSLCM_IO_HPP
#define OSLCM_IO_HPP

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oslcm/core.hpp"
#include "oslcm/generators.hpp"

namespace oslcm {

/// Parse failure with the 1-based line it occurred on.
class parse_error : public validation_error {
  public:
    parse_error(int line, const std::string &what)
        : validation_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

// Instance grammar: optional "c ..." comment lines anywhere, one header line
// "p oslcm <x_count> <y_count> <m>", then exactly m lines "<x> <y>" with
// 1 <= x <= x_count and x_count+1 <= y <= x_count+y_count. Y ids are stored
// as y - x_count.
inline two_layer_network parse_instance(std::istream &in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long x_count = 0;
    long long y_count = 0;
    long long edge_count = 0;
    std::vector<edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;  // blank line
        if (first == "c") continue;
        if (!have_header) {
            if (first != "p") throw parse_error(lineno, "expected header 'p oslcm ...'");
            std::string problem;
            if (!(ss >> problem) || problem != "oslcm")
                throw parse_error(lineno, "expected problem id 'oslcm'");
            if (!(ss >> x_count >> y_count >> edge_count))
                throw parse_error(lineno, "header needs '<x_count> <y_count> <m>'");
            std::string extra;
            if (ss >> extra) throw parse_error(lineno, "trailing content after header");
            if (x_count < 0 || y_count < 0 || edge_count < 0)
                throw parse_error(lineno, "header counts must be non-negative");
            have_header = true;
            edges.reserve(static_cast<std::size_t>(edge_count));
            continue;
        }
        if (static_cast<long long>(edges.size()) == edge_count)
            throw parse_error(lineno, "expected " + std::to_string(edge_count) +
                                          " edge lines, found more");
        long long x = 0;
        long long y = 0;
        std::istringstream es(line);
        if (!(es >> x >> y)) throw parse_error(lineno, "expected edge line '<x> <y>'");
        std::string extra;
        if (es >> extra) throw parse_error(lineno, "trailing content after edge");
        if (x < 1 || x > x_count)
            throw parse_error(lineno, "x endpoint " + std::to_string(x) + " out of range 1.." +
                                          std::to_string(x_count));
        if (y < x_count + 1 || y > x_count + y_count)
            throw parse_error(lineno, "y endpoint " + std::to_string(y) + " out of range " +
                                          std::to_string(x_count + 1) + ".." +
                                          std::to_string(x_count + y_count));
        edges.push_back({static_cast<int>(x), static_cast<int>(y - x_count)});
    }
    if (!have_header) throw parse_error(lineno, "missing header line");
    if (static_cast<long long>(edges.size()) != edge_count)
        throw parse_error(lineno, "expected " + std::to_string(edge_count) + " edge lines, found " +
                                      std::to_string(edges.size()));
    try {
        return build_network(static_cast<int>(x_count), static_cast<int>(y_count), std::move(edges));
    } catch (const validation_error &e) {
        throw parse_error(lineno, e.what());
    }
}

inline two_layer_network parse_instance(const std::string &text) {
    std::istringstream in(text);
    return parse_instance(in);
}

inline std::string write_instance(const two_layer_network &net) {
    std::ostringstream out;
    out << "p oslcm " << net.x_count << ' ' << net.y_count << ' ' << net.edges.size() << '\n';
    for (const edge e : net.edges) out << e.x << ' ' << net.x_count + e.y << '\n';
    return out.str();
}

/// FNV-1a 64-bit digest of the canonical instance text.
inline std::string instance_digest(const two_layer_network &net) {
    const std::string text = write_instance(net);
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) out << ((h >> shift) & 0xf);
    return out.str();
}

/// Y order as whitespace-separated external labels (x_count + y).
inline std::string format_order(const two_layer_network &net, const y_order &order) {
    std::ostringstream out;
    for (std::size_t i = 0; i < order.positions.size(); ++i) {
        if (i > 0) out << ' ';
        out << net.x_count + order.positions[i];
    }
    return out.str();
}

/// Parses an order given as external labels (header convention) or, when
/// every value is within 1..y_count, as raw Y ids.
inline y_order parse_order(const two_layer_network &net, const std::string &text) {
    std::istringstream in(text);
    std::vector<long long> raw;
    long long v = 0;
    while (in >> v) raw.push_back(v);
    std::string extra;
    in.clear();
    if (in >> extra) throw validation_error("order contains non-numeric token: " + extra);
    bool external = false;
    for (const long long val : raw)
        if (val > net.y_count) external = true;
    y_order order;
    order.positions.reserve(raw.size());
    for (const long long val : raw) {
        const long long y = external ? val - net.x_count : val;
        if (y < 1 || y > net.y_count)
            throw validation_error("order entry " + std::to_string(val) + " is not a Y vertex");
        order.positions.push_back(static_cast<int>(y));
    }
    rank_of(net, order);  // permutation check
    return order;
}

inline nlohmann::ordered_json names_json(const name_map &names) {
    nlohmann::ordered_json j;
    j["x"] = nlohmann::ordered_json::object();
    j["y"] = nlohmann::ordered_json::object();
    for (const auto &[name, id] : names.x) j["x"][name] = id;
    for (const auto &[name, id] : names.y) j["y"][name] = id;
    return j;
}

}  // namespace oslcm

#endif

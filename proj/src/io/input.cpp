#include "io/input.hpp"

#include <json.hpp>

#include <sstream>

namespace toric::io {

using nlohmann::json;
using toric::input_error;

namespace {

int parse_int_field(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string("field '") + what + "' must be an integer");
    return j.get<int>();
}

InputDocument parse_json_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("input document must be a JSON object");
    InputDocument in;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw input_error("field 'name' must be a string");
        in.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("dim")) throw input_error("missing field 'dim'");
    in.dim = parse_int_field(doc["dim"], "dim");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw input_error("missing or invalid field 'points'");
    for (const auto& row : doc["points"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != in.dim)
            throw input_error("each point must be a list of 'dim' integers");
        IntVec p;
        for (const auto& c : row) {
            if (!c.is_number_integer()) throw input_error("point coordinates must be integers");
            p.push_back(geom::Int(c.get<long long>()));
        }
        in.points.push_back(std::move(p));
    }
    if (doc.contains("dilations")) {
        if (!doc["dilations"].is_array()) throw input_error("field 'dilations' must be a list");
        for (const auto& d : doc["dilations"]) {
            int i = parse_int_field(d, "dilations");
            if (i < 1) throw input_error("dilations must be >= 1");
            in.dilations.push_back(i);
        }
    }
    return in;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

InputDocument parse_line_input(const std::string& text) {
    InputDocument in;
    in.dim = -1;
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw input_error("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0] == "name") {
            if (toks.size() != 2) fail("expected: name <identifier>");
            in.name = toks[1];
            continue;
        }
        if (toks[0] == "dim") {
            if (toks.size() != 2) fail("expected: dim <integer>");
            try {
                in.dim = std::stoi(toks[1]);
            } catch (...) {
                fail("invalid dimension '" + toks[1] + "'");
            }
            continue;
        }
        if (toks[0] == "dilation" || toks[0] == "dilations") {
            if (toks.size() != 2) fail("expected: dilation <i[,i...]>");
            std::istringstream ds(toks[1]);
            std::string item;
            while (std::getline(ds, item, ',')) {
                try {
                    int i = std::stoi(item);
                    if (i < 1) fail("dilations must be >= 1");
                    in.dilations.push_back(i);
                } catch (const input_error&) {
                    throw;
                } catch (...) {
                    fail("invalid dilation '" + item + "'");
                }
            }
            continue;
        }
        // A point row.
        if (in.dim < 0) fail("'dim' must appear before the points");
        if (static_cast<int>(toks.size()) != in.dim)
            fail("expected " + std::to_string(in.dim) + " coordinates, got " +
                 std::to_string(toks.size()));
        IntVec p;
        for (const auto& tok : toks) {
            try {
                size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                p.push_back(geom::Int(v));
            } catch (...) {
                fail("invalid coordinate '" + tok + "'");
            }
        }
        in.points.push_back(std::move(p));
    }
    if (in.dim < 0) throw input_error("missing 'dim' line");
    if (in.points.empty()) throw input_error("no points in input");
    return in;
}

} // namespace

InputDocument parse_input(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    InputDocument in;
    if (first != std::string::npos && text[first] == '{')
        in = parse_json_input(text);
    else
        in = parse_line_input(text);
    if (in.dilations.empty()) in.dilations.push_back(1);
    return in;
}

std::vector<RatVec> parse_heights(const std::string& text) {
    std::vector<RatVec> out;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error& e) {
            throw input_error(std::string("heights JSON parse error: ") + e.what());
        }
        if (!doc.is_array()) throw input_error("heights must be an array of arrays");
        for (const auto& row : doc) {
            if (!row.is_array()) throw input_error("heights must be an array of arrays");
            RatVec h;
            for (const auto& e : row) {
                if (e.is_number_integer()) {
                    h.push_back(geom::Rat(geom::Int(e.get<long long>())));
                } else if (e.is_string()) {
                    auto q = geom::parse_rat(e.get<std::string>());
                    if (!q) throw input_error("invalid rational '" + e.get<std::string>() + "'");
                    h.push_back(*q);
                } else {
                    throw input_error("height entries must be integers or 'p/q' strings");
                }
            }
            out.push_back(std::move(h));
        }
        return out;
    }
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        RatVec h;
        std::string tok;
        while (ls >> tok) {
            auto q = geom::parse_rat(tok);
            if (!q)
                throw input_error("line " + std::to_string(lineno) + ": invalid rational '" +
                                  tok + "'");
            h.push_back(*q);
        }
        if (!h.empty()) out.push_back(std::move(h));
    }
    return out;
}

} // namespace toric::io

#include "aco/tsplib.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace aco::tsplib {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// "KEY: value", "KEY : value" and "KEY:value" all split the same way.
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trim(line.substr(0, colon));
    value = trim(line.substr(colon + 1));
    return !key.empty();
}

std::string format_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

TspInstance parse(std::istream& in) {
    std::string name;
    std::string type;
    std::string edge_weight_type;
    long dimension = -1;
    bool saw_coord_section = false;

    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "EOF") break;
        if (t == "NODE_COORD_SECTION") {
            saw_coord_section = true;
            break;
        }
        std::string key;
        std::string value;
        if (!split_header(t, key, value)) {
            throw ParseError("unrecognized line in TSPLIB header: '" + t + "'");
        }
        if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            type = value;
        } else if (key == "DIMENSION") {
            try {
                dimension = std::stol(value);
            } catch (const std::exception&) {
                throw ParseError("invalid DIMENSION value: '" + value + "'");
            }
        } else if (key == "EDGE_WEIGHT_TYPE") {
            edge_weight_type = value;
        } else if (key == "COMMENT") {
            // kept out of the in-memory model
        } else {
            std::cerr << "tsplib: ignoring unknown header key '" << key << "'\n";
        }
    }

    if (!type.empty() && type != "TSP") {
        throw UnsupportedFormatError("unsupported TYPE '" + type + "' (only TSP)");
    }
    if (edge_weight_type != "EUC_2D") {
        throw UnsupportedFormatError("unsupported EDGE_WEIGHT_TYPE '" + edge_weight_type +
                                     "' (only EUC_2D)");
    }
    if (dimension < 2) {
        throw ParseError("DIMENSION must be at least 2, got " + std::to_string(dimension));
    }
    if (!saw_coord_section) {
        throw ParseError("missing NODE_COORD_SECTION");
    }

    TspInstance inst;
    inst.name = name;
    inst.points.reserve(static_cast<std::size_t>(dimension));
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t == "EOF") break;
        std::istringstream row(t);
        long id = 0;
        double x = 0.0;
        double y = 0.0;
        if (!(row >> id >> x >> y)) {
            throw ParseError("malformed node coordinate row: '" + t + "'");
        }
        // File ids are recorded 1-based (or arbitrary); indices follow file order.
        inst.points.push_back({x, y});
    }
    if (static_cast<long>(inst.points.size()) != dimension) {
        throw ParseError("DIMENSION says " + std::to_string(dimension) + " nodes but " +
                         std::to_string(inst.points.size()) + " coordinate rows found");
    }
    inst.validate();
    return inst;
}

TspInstance parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

TspInstance load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open TSPLIB file: " + path.string());
    }
    TspInstance inst = parse(in);
    if (inst.name.empty()) {
        inst.name = path.stem().string();
    }
    return inst;
}

std::string write(const TspInstance& inst) {
    inst.validate();
    std::ostringstream out;
    out << "NAME : " << (inst.name.empty() ? "unnamed" : inst.name) << "\n"
        << "TYPE : TSP\n"
        << "DIMENSION : " << inst.size() << "\n"
        << "EDGE_WEIGHT_TYPE : EUC_2D\n"
        << "NODE_COORD_SECTION\n";
    for (int i = 0; i < inst.size(); ++i) {
        out << (i + 1) << ' ' << format_coord(inst.points[i].x) << ' '
            << format_coord(inst.points[i].y) << "\n";
    }
    out << "EOF\n";
    return out.str();
}

void save_file(const TspInstance& inst, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    out << write(inst);
    if (!out) {
        throw std::runtime_error("failed writing to: " + path.string());
    }
}

} // namespace aco::tsplib

#include "arr/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arr {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Arrangement load_arrangement_file(const std::string& path) {
    return load_arrangement(read_file(path));
}

WeightMatrix load_weight_matrix(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed weight matrix file: ") + e.what());
    }
    WeightMatrix a;
    if (!j.contains("rows")) throw std::invalid_argument("weight matrix file needs rows");
    for (const auto& rj : j["rows"]) {
        std::vector<Scalar> row;
        for (const auto& sj : rj) row.push_back(Scalar::parse(sj.get<std::string>()));
        a.rows.push_back(std::move(row));
    }
    for (const auto& row : a.rows)
        if (row.size() != a.rows[0].size())
            throw std::invalid_argument("weight matrix rows have unequal lengths");
    return a;
}

WeightMatrix load_weight_matrix_file(const std::string& path) {
    return load_weight_matrix(read_file(path));
}

Loop load_loop(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed loop file: ") + e.what());
    }
    auto point = [](const nlohmann::json& pj) {
        CxPoint p;
        for (const auto& cj : pj) p.push_back(Cx(cj.at(0).get<double>(), cj.at(1).get<double>()));
        return p;
    };
    Loop loop;
    loop.base = point(j.at("base"));
    for (const auto& vj : j.at("vertices")) loop.vertices.push_back(point(vj));
    if (j.contains("samples_per_segment")) loop.samples_per_segment = j["samples_per_segment"];
    return loop;
}

Loop load_loop_file(const std::string& path) {
    return load_loop(read_file(path));
}

std::vector<Scalar> parse_weight_row(const std::string& text) {
    std::vector<Scalar> row;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            row.push_back(Scalar::parse(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (cur.find_first_not_of(" \t") != std::string::npos) row.push_back(Scalar::parse(cur));
    return row;
}

}  // namespace arr

#include "secreg/channel_file.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace secreg {

namespace {

using nlohmann::json;

json parse_object(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument(path + ": top level must be an object");
    return j;
}

Matrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument(where + " must be a nonempty array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<double> entries;
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.empty())
            throw std::invalid_argument(where + " rows must be nonempty arrays");
        if (r == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw std::invalid_argument(where + " rows must all have the same length");
        for (const json& e : row) {
            if (!e.is_number()) throw std::invalid_argument(where + " entries must be numbers");
            entries.push_back(e.get<double>());
        }
    }
    return Matrix(static_cast<int>(rows), static_cast<int>(cols), entries);
}

json dump_matrix(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

void reject_unknown(const json& j, const std::string& path, std::initializer_list<const char*> known) {
    for (const auto& item : j.items()) {
        bool found = false;
        for (const char* k : known)
            if (item.key() == k) {
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument(path + ": unknown field \"" + item.key() + "\"");
    }
}

} // namespace

ChannelFile read_channel_file(const std::string& path) {
    const json j = parse_object(path);
    reject_unknown(j, path, {"H1", "H2", "P", "sigma", "seed"});
    for (const char* required : {"H1", "H2", "P"})
        if (!j.contains(required))
            throw std::invalid_argument(path + ": missing field \"" + std::string(required) + "\"");

    ChannelFile file;
    file.h1 = parse_matrix(j["H1"], path + ": H1");
    file.h2 = parse_matrix(j["H2"], path + ": H2");
    if (file.h1.cols() != file.h2.cols())
        throw std::invalid_argument(path + ": H1 and H2 must have the same column count");

    const json& p = j["P"];
    if (!p.is_number()) throw std::invalid_argument(path + ": P must be a number");
    file.total_power = p.get<double>();
    if (!(file.total_power >= 0.0) || !std::isfinite(file.total_power))
        throw std::invalid_argument(path + ": P must be finite and nonnegative");

    if (j.contains("sigma")) {
        const json& s = j["sigma"];
        if (!s.is_number()) throw std::invalid_argument(path + ": sigma must be a number");
        file.sigma = s.get<double>();
        if (!(file.sigma > 0.0 && file.sigma <= 1.0))
            throw std::invalid_argument(path + ": sigma must be in (0, 1]");
    }
    if (j.contains("seed")) {
        const json& s = j["seed"];
        if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<long long>() < 0))
            throw std::invalid_argument(path + ": seed must be a nonnegative integer");
        file.seed = s.get<std::uint64_t>();
    }
    return file;
}

void write_channel_file(const std::string& path, const ChannelFile& file) {
    json j;
    j["H1"] = dump_matrix(file.h1);
    j["H2"] = dump_matrix(file.h2);
    j["P"] = file.total_power;
    j["sigma"] = file.sigma;
    j["seed"] = file.seed;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << '\n';
}

Matrix read_q_file(const std::string& path) {
    const json j = parse_object(path);
    reject_unknown(j, path, {"Q"});
    if (!j.contains("Q")) throw std::invalid_argument(path + ": missing field \"Q\"");
    return parse_matrix(j["Q"], path + ": Q");
}

} // namespace secreg

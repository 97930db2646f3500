#include "qlab/matrix_io.hpp"

#include <fstream>

#include <json.hpp>

namespace qlab {

std::string matrix_to_json(const Operator& op) {
    nlohmann::ordered_json j;
    j["schema"] = "qlab-matrix/1";
    j["base_q"] = op.base();
    j["row_labels"] = op.row_labels();
    j["col_labels"] = op.col_labels();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (int i = 0; i < op.rows(); ++i)
        for (int jj = 0; jj < op.cols(); ++jj)
            if (!op.at(i, jj).is_zero())
                entries.push_back({i, jj, op.at(i, jj).serialize()});
    j["entries"] = entries;
    return j.dump(2) + "\n";
}

Operator matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw IoError(std::string("matrix JSON parse error: ") + e.what());
    }
    if (j.value("schema", "") != "qlab-matrix/1")
        throw IoError("unexpected schema: " + j.value("schema", "<missing>"));
    long long base_q = j.at("base_q").get<long long>();
    Operator op(base_q, j.at("row_labels").get<std::vector<std::string>>(),
                j.at("col_labels").get<std::vector<std::string>>());
    for (const auto& e : j.at("entries")) {
        int r = e.at(0).get<int>();
        int c = e.at(1).get<int>();
        if (r < 0 || r >= op.rows() || c < 0 || c >= op.cols())
            throw IoError("matrix entry out of bounds");
        op.set(r, c, ExactScalar::deserialize(base_q, e.at(2).get<std::string>()));
    }
    return op;
}

void export_matrix(const Operator& op, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << matrix_to_json(op);
    if (!f) throw IoError("write failed: " + path);
}

Operator import_matrix(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return matrix_from_json(text);
}

} // namespace qlab

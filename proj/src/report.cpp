#include "quipu/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace quipu {

std::vector<TableRow> reproduction_table(int e, int n_lo, int n_hi, const Scalar& tol) {
    if (e < 6 || e > 8)
        throw std::invalid_argument("reproduction table covers e in {6,7,8}");
    std::vector<TableRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        if (n < 2 * e)
            continue;
        TableRow row;
        row.n = n;
        try {
            row.predicted = predicted_min(n, e);
            row.has_prediction = true;
        } catch (const std::invalid_argument&) {
            row.has_prediction = false;
        }
        MinimizerReport rep = family_min(n, e, FamilyId::P, tol);
        row.found = rep.argmin;
        row.rho = rep.rho.value;
        row.match = row.has_prediction && row.predicted == row.found;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string kvs_joined(const std::vector<KVector>& kvs) {
    std::string s;
    for (size_t i = 0; i < kvs.size(); ++i) {
        if (i)
            s += ";";
        s += kvs[i].str();
    }
    return s;
}

} // namespace

std::string table_to_csv(const std::vector<TableRow>& rows, unsigned digits) {
    std::ostringstream out;
    out << "n,predicted,found,rho,match\n";
    for (const auto& r : rows) {
        out << r.n << "," << (r.has_prediction ? kvs_joined(r.predicted) : "-") << ","
            << kvs_joined(r.found) << "," << to_decimal(r.rho, digits) << ","
            << (r.has_prediction ? (r.match ? "yes" : "NO") : "-") << "\n";
    }
    return out.str();
}

std::string table_to_json(const std::vector<TableRow>& rows, unsigned digits) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["n"] = r.n;
        if (r.has_prediction) {
            j["predicted"] = nlohmann::json::array();
            for (const auto& kv : r.predicted)
                j["predicted"].push_back(kv.str());
            j["match"] = r.match;
        }
        j["found"] = nlohmann::json::array();
        for (const auto& kv : r.found)
            j["found"].push_back(kv.str());
        j["rho"] = to_decimal(r.rho, digits);
        arr.push_back(j);
    }
    return arr.dump();
}

} // namespace quipu

#pragma once

#include <string>
#include <vector>

#include "quipu/families.hpp"

namespace quipu {

// One row of the prediction-vs-search table for e in {6,7,8}.
struct TableRow {
    int n = 0;
    bool has_prediction = false;
    std::vector<KVector> predicted;
    std::vector<KVector> found;
    Scalar rho;
    bool match = false;
};

std::vector<TableRow> reproduction_table(int e, int n_lo, int n_hi, const Scalar& tol);

std::string table_to_csv(const std::vector<TableRow>& rows, unsigned digits);
std::string table_to_json(const std::vector<TableRow>& rows, unsigned digits);

} // namespace quipu

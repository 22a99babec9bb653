#include "quipu/verify.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace quipu {

bool CertificateReport::all_satisfied() const {
    for (const auto& c : checks)
        if (!c.diagnostic && !c.satisfied)
            return false;
    return true;
}

std::string CertificateReport::to_json(unsigned digits) const {
    nlohmann::json j;
    j["n"] = n;
    j["e"] = e;
    j["kv"] = kv.str();
    j["rho"] = nlohmann::json::parse(rho.to_json(digits));
    j["s"] = to_decimal(s, digits);
    j["kbar"] = to_decimal(kbar, digits);
    j["d2_at_rho"] = to_decimal(d2_at_rho, digits);
    j["lower"] = to_decimal(lower, digits);
    j["upper"] = to_decimal(upper, digits);
    j["c_bar"] = to_decimal(c_bar, digits);
    j["all_satisfied"] = all_satisfied();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json row;
        row["id"] = c.id;
        row["index"] = c.index;
        row["slack"] = to_decimal(c.slack, digits);
        row["satisfied"] = c.satisfied;
        if (c.diagnostic)
            row["diagnostic"] = true;
        j["checks"].push_back(row);
    }
    return j.dump();
}

CertificateReport certify_minimizer(int n, int e, const KVector& kv, const Scalar& tol) {
    kv.validate();
    if (kv.family != FamilyId::P)
        throw std::invalid_argument("certificates apply to family P members");
    if (kv.e != e || kv.order() != n)
        throw std::invalid_argument("k-vector does not realize the requested (n, e)");

    CertificateReport rep;
    rep.n = n;
    rep.e = e;
    rep.kv = kv;
    rep.rho = rho_tree(from_kvector(kv), tol);

    TransferParams c = make_params(rep.rho.value);
    int r = kv.r();
    rep.s = Scalar(n - 2 * e + 2) / (e - 4);
    rep.kbar = Scalar(n - 2 * e) / r;
    rep.d2_at_rho = c.d2;
    long fs = static_cast<long>(n - 2 * e + 2) / (e - 4); // floor, numerator >= 0
    rep.lower = 2 * pow(c.x1, rep.s) / (1 - pow(c.x1, rep.s + 1));
    rep.upper = 2 * pow_int(c.x1, fs) / (1 - pow_int(c.x1, fs + 1));
    rep.c_bar = (rep.rho.value + sqrt(rep.rho.value * rep.rho.value + 4 * c.d1 * c.d2)) / 2;

    // checks hold exactly at the true root; the pass margin scales with the
    // root enclosure, floored at the precision noise level
    Scalar slack_tol = 10 * (rep.rho.hi - rep.rho.lo);
    Scalar noise_floor = pow(Scalar(10), -static_cast<int>(working_precision()) + 20);
    if (slack_tol < noise_floor)
        slack_tol = noise_floor;
    auto add = [&](const std::string& id, int index, const Scalar& slack, bool diagnostic = false) {
        rep.checks.push_back({id, index, slack, slack >= -slack_tol, diagnostic});
    };

    add("d2-lower", 0, c.d2 - rep.lower);
    add("d2-upper", 0, rep.upper - c.d2);
    Scalar root_cd = sqrt(rep.c_bar * c.d1);
    for (int i = 1; i <= r; ++i) {
        long ki = kv.ks[static_cast<size_t>(i - 1)];
        if (i == 1 || i == r) {
            add("end-lower", i, c.d2 - root_cd * pow_int(c.x1, ki + 1));
            add("end-upper", i, root_cd * pow_int(c.x1, ki) - c.d2);
        } else {
            add("mid-lower", i, c.d2 - rep.c_bar * pow_int(c.x1, ki + 1));
            add("mid-upper", i, rep.c_bar * pow_int(c.x1, ki - 1) - c.d2);
        }
    }
    // reported floor diagnostics (informational only)
    if (n >= 9 * e - 30) {
        long fl = static_cast<long>(floor(rep.kbar + Scalar(2) / r));
        for (int i = 1; i <= r; ++i) {
            long ki = kv.ks[static_cast<size_t>(i - 1)];
            long bound = (i == 1 || i == r) ? fl - 2 : fl - 3;
            add("floor-diagnostic", i, Scalar(ki - bound), true);
        }
    }
    return rep;
}

std::vector<PQScanRow> pq_positivity_scan(const KVector& kv, const Scalar& lambda) {
    kv.validate();
    if (kv.family != FamilyId::P)
        throw std::invalid_argument("positivity scan applies to family P members");
    TransferParams ctx = make_params(lambda);
    std::vector<PQScanRow> rows;
    auto lp = family_prefix_pairs(kv, ctx);
    for (size_t i = 0; i < lp.size(); ++i)
        rows.push_back({'L', static_cast<int>(i), lp[i].p, lp[i].q});
    auto rp = family_suffix_pairs(kv, ctx); // R_{r+1}, R_r, ..., R_2
    int r = kv.r();
    for (size_t m = 0; m < rp.size(); ++m)
        rows.push_back({'R', r + 1 - static_cast<int>(m), rp[m].p, rp[m].q});
    return rows;
}

Tree double_prime_two_gap(int k, int i) {
    if (k < 0 || i < 0)
        throw std::invalid_argument("gaps must be nonnegative");
    QuipuSpec spec;
    spec.p = i + k + 5;
    spec.attachments = {{1, 1}, {i + 2, 1}, {i + k + 3, 1}};
    return build_quipu(spec);
}

LimitTable limit_convergence(LimitSeries kind, long k, const std::vector<long>& sizes,
                             const Scalar& tol) {
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("sizes must be increasing");
    LimitTable table;
    table.kind = kind;
    table.k = k;
    switch (kind) {
    case LimitSeries::DoublePrimeIKJ:
        table.limit = solve_limit_equation(LimitKind::RhoDoublePrimeK, k, tol);
        break;
    case LimitSeries::PrimeKJ:
        table.limit = solve_limit_equation(LimitKind::RhoPrimeK, k, tol);
        break;
    case LimitSeries::CorollaryKI:
        table.limit = solve_limit_equation(LimitKind::RhoDoublePrimeK, 2 * k + 3, tol);
        break;
    }
    for (long size : sizes) {
        LimitRow row;
        row.size = size;
        switch (kind) {
        case LimitSeries::DoublePrimeIKJ: {
            KVector kv{FamilyId::PDoublePrime, 5,
                       {static_cast<int>(size), static_cast<int>(k), static_cast<int>(size)}};
            row.rho = rho_tree(from_kvector(kv), tol);
            break;
        }
        case LimitSeries::PrimeKJ: {
            KVector kv{FamilyId::PPrime, 5, {static_cast<int>(k), static_cast<int>(size)}};
            row.rho = rho_tree(from_kvector(kv), tol);
            break;
        }
        case LimitSeries::CorollaryKI: {
            row.rho = rho_tree(double_prime_two_gap(static_cast<int>(k), static_cast<int>(size)), tol);
            KVector kv{FamilyId::PDoublePrime, 5,
                       {static_cast<int>(size), static_cast<int>(2 * k + 3), static_cast<int>(size)}};
            row.has_swap = true;
            row.swap_rho = rho_tree(from_kvector(kv), tol);
            row.swap_diff = abs(row.rho.value - row.swap_rho.value);
            break;
        }
        }
        row.diff = row.rho.value - table.limit.value;
        table.rows.push_back(row);
    }
    return table;
}

std::string LimitTable::to_json(unsigned digits) const {
    nlohmann::json j;
    switch (kind) {
    case LimitSeries::DoublePrimeIKJ: j["kind"] = "double-prime"; break;
    case LimitSeries::PrimeKJ: j["kind"] = "prime"; break;
    case LimitSeries::CorollaryKI: j["kind"] = "two-gap-swap"; break;
    }
    j["k"] = k;
    j["limit"] = nlohmann::json::parse(limit.to_json(digits));
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["size"] = r.size;
        row["rho"] = to_decimal(r.rho.value, digits);
        row["diff"] = to_decimal(r.diff, digits);
        if (r.has_swap) {
            row["swap_rho"] = to_decimal(r.swap_rho.value, digits);
            row["swap_diff"] = to_decimal(r.swap_diff, digits);
        }
        j["rows"].push_back(row);
    }
    return j.dump();
}

std::string LimitTable::to_csv(unsigned digits) const {
    std::ostringstream out;
    out << "size,rho,diff,swap_rho,swap_diff\n";
    for (const auto& r : rows) {
        out << r.size << "," << to_decimal(r.rho.value, digits) << ","
            << to_decimal(r.diff, digits) << ",";
        if (r.has_swap)
            out << to_decimal(r.swap_rho.value, digits) << "," << to_decimal(r.swap_diff, digits);
        else
            out << ",";
        out << "\n";
    }
    return out.str();
}

} // namespace quipu

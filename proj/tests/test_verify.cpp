#include <doctest.h>

#include "quipu/verify.hpp"

using namespace quipu;

namespace {
Scalar tolv() { return default_tol(); }
}

TEST_CASE("certificate passes at a searched minimizer") {
    int k = 10, n = 2 * k + 12;
    MinimizerReport rep = family_min(n, 6, FamilyId::P, tolv());
    REQUIRE(rep.argmin.size() == 1);
    CertificateReport cert = certify_minimizer(n, 6, rep.argmin[0], tolv());
    CHECK(cert.all_satisfied());
    CHECK(cert.rho.value == rep.rho.value);
    // s and kbar recomputed from the k-vector agree with the stored values
    CHECK(cert.s == Scalar(n - 2 * 6 + 2) / (6 - 4));
    CHECK(cert.kbar == Scalar(n - 2 * 6) / 2);
    CHECK(cert.lower <= cert.d2_at_rho + pow(Scalar(10), -30));
    CHECK(cert.d2_at_rho <= cert.upper + pow(Scalar(10), -30));
}

TEST_CASE("certificate fails on an unbalanced control") {
    int k = 10, n = 2 * k + 12;
    KVector off{FamilyId::P, 6, {k + 3, k - 3}};
    CertificateReport cert = certify_minimizer(n, 6, off.canonical(), tolv());
    CHECK_FALSE(cert.all_satisfied());
}

TEST_CASE("equality case of the lower bound at the balanced vector") {
    // n-6 divisible by e-4 with s integral: lower bound tight at the minimizer
    for (int e : {6, 7}) {
        int s = 8;
        int r = e - 4;
        int n = (s + 2) * r + 6;
        std::vector<int> ks(static_cast<size_t>(r), s);
        ks.front() = s - 1;
        ks.back() = s - 1;
        CertificateReport cert = certify_minimizer(n, e, KVector{FamilyId::P, e, ks}, tolv());
        CHECK(cert.all_satisfied());
        CHECK(abs(cert.d2_at_rho - cert.lower) < pow(Scalar(10), -20));
    }
}

TEST_CASE("certificate rejects wrong inputs") {
    CHECK_THROWS_AS(certify_minimizer(16, 6, KVector{FamilyId::PPrime, 6, {1, 1, 2}}, tolv()),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify_minimizer(17, 6, KVector{FamilyId::P, 6, {2, 2}}, tolv()),
                    std::invalid_argument);
}

TEST_CASE("positivity scan rows") {
    KVector kv{FamilyId::P, 6, {5, 5}};
    // L0 = P5 at lambda 5/2: p = 133/32, q = 77/2
    auto rows = pq_positivity_scan(kv, Scalar(5) / 2);
    REQUIRE(rows.size() == 4); // L0, L1, R3, R2
    CHECK(rows[0].side == 'L');
    CHECK(rows[0].index == 0);
    CHECK(abs(rows[0].p - Scalar(133) / 32) < pow(Scalar(10), -80));
    CHECK(abs(rows[0].q - Scalar(77) / 2) < pow(Scalar(10), -80));
    CHECK(rows[2].side == 'R');
    CHECK(rows[2].index == 3);

    // all pairs nonnegative slightly above the radius, strictly positive at 3
    Scalar rho = rho_tree(from_kvector(kv), tolv()).value;
    for (const auto& row : pq_positivity_scan(kv, rho + Scalar("0.01"))) {
        CHECK(row.p >= -pow(Scalar(10), -30));
        CHECK(row.q >= -pow(Scalar(10), -30));
    }
    for (const auto& row : pq_positivity_scan(kv, Scalar(3))) {
        CHECK(row.p > 0);
        CHECK(row.q > 0);
    }
}

TEST_CASE("radius gap to the limit shrinks as n grows at fixed e") {
    // family minimum approaches lambda0 from above, monotonically in n
    Scalar prev(-1);
    Scalar l0 = lambda0();
    for (int n = 28; n <= 40; n += 2) {
        MinimizerReport rep = family_min(n, 6, FamilyId::P, tolv());
        Scalar gap = rep.rho.value - l0;
        CHECK(gap > 0);
        if (prev > 0)
            CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("certificate json includes per-check rows") {
    MinimizerReport rep = family_min(30, 6, FamilyId::P, tolv());
    CertificateReport cert = certify_minimizer(30, 6, rep.argmin[0], tolv());
    std::string js = cert.to_json(40);
    CHECK(js.find("\"d2-lower\"") != std::string::npos);
    CHECK(js.find("\"end-upper\"") != std::string::npos);
    CHECK(js.find("\"all_satisfied\":true") != std::string::npos);
}

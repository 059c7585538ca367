// Acceptance runner: one PASS/FAIL line per criterion. With a criterion
// number as argument only that criterion runs; the exit status is non-zero
// when a gating criterion fails.

#include "curvedt/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace curvedt;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::vector<CheckResult> (*run)(const VerifyScope&);
    bool gating;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "golden Betti tables, g=2, r<=4", &check_golden_betti, true},
        {2, "golden fixed-determinant tables, g=2,3, r<=4", &check_golden_determinant, true},
        {3, "closed rational Poincare formulas, g=2,3", &check_closed_forms, true},
        {4, "composition resolutions of Q_(r,d), r<=4", &check_resolutions, true},
        {5, "lambda-ring identities", &check_lambda_ring, true},
        {6, "integrality, duality, positivity, palindromy, r<=5, g=2,3", &check_hdt_properties, true},
        {7, "torsion invariants, g=2,3,4, d<=6", &check_torsion, true},
        {8, "virtual smallness over all strata, r<=6, g=2,3", &check_strata, true},
        {9, "genus one invariants, r<=3 (exploratory)", &check_elliptic, false},
    };
    return list;
}

bool run(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = c.run(VerifyScope{});
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int passed = 0;
    std::string failures;
    for (const auto& r : results) {
        if (r.passed) {
            ++passed;
            continue;
        }
        failures += failures.empty() ? " | failed: " : "; ";
        failures += r.name + (r.detail.empty() ? "" : " (" + r.detail + ")");
    }
    const bool ok = passed == static_cast<int>(results.size()) && !results.empty();
    const char* status = ok ? "PASS" : (c.gating ? "FAIL" : "WARN");
    std::cout << status << "  criterion " << c.id << ": " << c.title << "  [" << passed << "/" << results.size()
              << " checks, tolerance 0, " << static_cast<long>(seconds * 1000) << " ms]" << failures << std::endl;
    return ok || !c.gating;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria().size())) {
            std::cerr << "usage: acceptance [criterion 1-" << criteria().size() << "]\n";
            return 2;
        }
    }
    bool all_ok = true;
    for (const auto& c : criteria())
        if (only == 0 || c.id == only)
            all_ok = run(c) && all_ok;
    return all_ok ? 0 : 1;
}

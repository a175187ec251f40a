// Acceptance suite: runs every criterion at full scale and prints one
// pass/fail line each. Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "sml/verify.hpp"

namespace {

struct Criterion {
    const char* id;
    const char* target;
    const char* description;
};

constexpr Criterion kCriteria[] = {
    {"01", "minpath", "minimal pathological example: hat 3/2, degree 4/3"},
    {"02", "mazur-degree", "function-space degree 3/2 by full 2^16 sweep; hat 2 at levels 3,4"},
    {"03", "covering-numbers", "covering numbers: 1/2, 1/2, 1/(n+1) with (n+1)! chains"},
    {"04", "solecki-chi", "chi(Omega_n) = 2^(n-1)+1; exhaustive subfamily structure"},
    {"05", "edfin-nonpath", "finite-block sup measure has degree exactly 1"},
    {"06", "uniform-bound", "200 random covering instances stay within M/delta"},
    {"07", "color1-bound", "1000 random matrices: 1-homogeneous mass at most 2"},
    {"08", "dyadic-round", "1000 random matrices: rounding below with column error bound"},
    {"09", "rk-solecki", "reduction fibers, backward covers and positivity at level 1"},
    {"10", "rk-monotone", "100 random pushforwards: degree monotone, hat inequality"},
    {"11", "banach-roundtrip", "100 random sequence round trips; degree 1 by LP"},
    {"12", "property-a", "staged families: singleton values, cell masses, stage bound"},
    {"13", "axiom-suite", "every generator passes the axiom check"},
};

} // namespace

int main() {
    sml::VerifyParams params; // full scale, fixed seed
    int failures = 0;
    for (const Criterion& c : kCriteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS";
        std::string detail;
        try {
            const sml::VerifySuite suite = sml::run_verify_target(c.target, params);
            if (!suite.all_pass) {
                verdict = "FAIL";
                ++failures;
                for (const sml::VerifyRow& row : suite.rows)
                    if (!row.pass)
                        detail += "\n    " + row.name + ": expected " + row.expected + ", got " +
                                  row.computed;
            }
        } catch (const std::exception& e) {
            verdict = "FAIL";
            ++failures;
            detail = std::string("\n    exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        std::printf("criterion-%s %s — %s (%lld ms)%s\n", c.id, verdict.c_str(), c.description,
                    static_cast<long long>(ms), detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", sizeof(kCriteria) / sizeof(kCriteria[0]));
    return failures == 0 ? 0 : 1;
}

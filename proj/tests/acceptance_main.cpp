#include "ordlift/acceptance.hpp"

#include <cstring>
#include <iostream>
#include <map>

// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit code 0 iff all gating criteria pass.
int main(int argc, char** argv) {
    std::string fixtures = "fixtures";
    unsigned long seed = 20240809;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--fixtures") && i + 1 < argc) fixtures = argv[++i];
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::stoul(argv[++i]);
    }
    ordlift::Report rep;
    try {
        rep = ordlift::run_acceptance(fixtures, seed);
    } catch (const std::exception& e) {
        std::cout << "FAIL acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    for (const auto& c : rep.checks) {
        bool gating = !(c.details.is_object() && c.details.contains("gating") &&
                        c.details["gating"] == false);
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!gating) std::cout << " (non-gating)";
        if (c.elapsed_ms > 0) std::cout << "  [" << (long)c.elapsed_ms << " ms]";
        if (!c.pass && !c.details.is_null()) std::cout << "  " << c.details.dump();
        std::cout << "\n";
    }
    bool ok = ordlift::gating_pass(rep);
    std::cout << (ok ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return ok ? 0 : 1;
}

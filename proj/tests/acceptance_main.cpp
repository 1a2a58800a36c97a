// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "fpt/acceptance.hpp"

int main(int argc, char** argv) {
    fpt::AcceptanceOptions options;
    options.threads = std::max(1u, std::thread::hardware_concurrency());
    int only = 0;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--seed") options.seed = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--threads") options.threads = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
        else if (flag == "--only") only = std::atoi(argv[i + 1]);
    }
    std::printf("acceptance suite, rng %s, seed %llu\n", fpt::kRngName, static_cast<unsigned long long>(options.seed));
    int failed = 0;
    auto report = [&](const fpt::CriterionResult& r) {
        std::printf("%s\n", fpt::format_result(r).c_str());
        std::fflush(stdout);
        failed += !r.passed;
    };
    if (only > 0)
        report(fpt::run_criterion(only, options));
    else
        fpt::run_acceptance(options, report);
    std::printf("%s\n", failed == 0 ? "all criteria passed" : "some criteria FAILED");
    return failed == 0 ? 0 : 1;
}

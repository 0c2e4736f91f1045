// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.
#include "app/reproduce.hh"

#include <cstring>
#include <iostream>

int main(int argc, char **argv)
{
    pmramsey::app::ReproduceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--include-slow") == 0)
            opt.include_slow = true;
        else if (std::strncmp(argv[i], "--threads=", 10) == 0)
            opt.workers = std::atoi(argv[i] + 10);
        else {
            std::cerr << "usage: acceptance [--include-slow] [--threads=N]\n";
            return 1;
        }
    }
    opt.on_result = [](const pmramsey::app::CriterionResult &r) {
        std::cout << "criterion " << pmramsey::app::format_line(r) << std::endl;
    };
    auto results = pmramsey::app::reproduce(opt);
    int failed = 0;
    for (auto &r : results)
        failed += ! r.passed;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}

#include "braidforge/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    bf::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i)
        opt.only.push_back(std::atoi(argv[i]));
    int failed = 0;
    for (auto& r : bf::run_acceptance(opt)) {
        std::cout << bf::format_line(r) << std::endl;
        failed += !r.pass;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing" << std::endl;
    return failed ? 1 : 0;
}

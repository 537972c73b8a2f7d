#include <cstdlib>
#include <iostream>

#include "sspec/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_cache;
    if (const char* v = std::getenv("SIMPLE_SPECTRUM_CACHE")) env_cache = v;
    return sspec::run_cli(args, std::cout, std::cerr, env_cache);
}

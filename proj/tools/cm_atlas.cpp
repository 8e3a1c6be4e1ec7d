#include <cm_atlas/cli.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* env = std::getenv("CM_ATLAS_GRID");
    return cm_atlas::cli::run_cli(args, std::cout, std::cerr,
                                  env ? std::optional<std::string>(env) : std::nullopt);
}

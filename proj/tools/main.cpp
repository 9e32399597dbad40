#include <iostream>
#include <vector>

#include "rimhook/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rimhook::cli::run(std::move(args), std::cout, std::cerr);
}

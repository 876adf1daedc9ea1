#include <iostream>

#include "palk/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return palk::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}

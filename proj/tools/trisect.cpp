#include <iostream>
#include <string>
#include <vector>

#include "trisect/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return trisect::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}

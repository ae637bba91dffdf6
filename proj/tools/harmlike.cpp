#include <iostream>
#include <string>
#include <vector>

#include "harmlike/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return harmlike::cli::run(std::move(args), std::cout, std::cerr);
}

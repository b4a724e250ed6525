#include <iostream>
#include <string>
#include <vector>

#include "towel/cli/certify.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    return towel::cli::run_certify(args, std::cout, std::cerr);
}

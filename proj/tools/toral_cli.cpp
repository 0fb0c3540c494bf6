#include <iostream>
#include <string>
#include <vector>

#include "toral/cli.hpp"

int main(int argc, char ** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return toral::run_cli(args, std::cout, std::cerr);
}

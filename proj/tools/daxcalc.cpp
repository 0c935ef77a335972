#include <iostream>
#include <string>
#include <vector>

#include "daxcalc/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return daxcalc::run_cli(args, std::cout, std::cerr);
}

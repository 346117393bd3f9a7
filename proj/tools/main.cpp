#include <iostream>

#include "ncsys/cli.hpp"

int main(int argc, char** argv)
{
    return ncsys::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

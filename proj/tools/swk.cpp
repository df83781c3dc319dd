#include <iostream>

#include "swk/cli.hpp"

int main(int argc, char** argv)
{
    return swk::run_cli(argc, argv, std::cout, std::cerr);
}

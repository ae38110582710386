#include "fibcode/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return fibcode::cli::run(argc, argv, std::cout, std::cerr);
}

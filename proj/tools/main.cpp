#include "gmlie/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gmlie::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, std::cin);
}

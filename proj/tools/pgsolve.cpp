#include <iostream>

#include "pg/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return pg::cli_main({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}

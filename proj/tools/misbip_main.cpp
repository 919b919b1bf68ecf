#include "misbip/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
    return misbip::cli::run(argc, argv, std::cout, std::cerr);
}

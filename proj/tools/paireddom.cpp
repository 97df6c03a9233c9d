#include "paireddom/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return paireddom::cli::run(argc, argv, std::cout, std::cerr);
}

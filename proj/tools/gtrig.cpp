#include <iostream>

#include <gtrig/cli.hpp>

int main(int argc, char** argv)
{
    return gtrig::cli::run(argc, argv, std::cout, std::cerr);
}

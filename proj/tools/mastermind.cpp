#include <iostream>

#include <mastermind/cli.hpp>

int main(int argc, char **argv)
{
    return mastermind::cli::dispatch(argc, argv, std::cin, std::cout, std::cerr);
}

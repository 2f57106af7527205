#include "bchlie/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	return bchlie::cli::run(argc, argv, std::cout, std::cerr);
}

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    return bcs::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace gspec::cli;
    std::ios::sync_with_stdio(false);
    Command cmd;
    try {
        cmd = parse_args(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const HelpRequested& e) {
        std::cout << e.what();
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << e.what();
        return kExitUsage;
    }
    return execute(cmd, std::cin, std::cout, std::cerr);
}

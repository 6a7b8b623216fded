#include <iostream>
#include <string>
#include <vector>

#include "twwcol/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = twwcol::cli::dispatch(args);
    if (!result.help.empty())
        std::cout << result.help;
    else
        std::cout << result.report.dump(2) << '\n';
    return result.exit_code;
}

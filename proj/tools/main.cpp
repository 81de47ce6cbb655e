#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
    const auto res = adic::cli::execute(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}

#include <vector>

#include "astf/cli.hpp"

int main(int argc, char** argv) {
    return astf::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}

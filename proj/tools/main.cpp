#include "evosoc/cli.hpp"

int main(int argc, char** argv) {
    return evosoc::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}

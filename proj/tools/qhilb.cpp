#include <iostream>

#include "qhilb/cli.hpp"

int main(int argc, char** argv) {
    return qhilb::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}

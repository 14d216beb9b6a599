// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "trigerr/cli.hpp"

int main(int argc, char** argv) { return trigerr::cli::run(argc, argv, std::cout, std::cerr); }

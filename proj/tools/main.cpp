#include <zetatau/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    return zetatau::cli::run(argc, argv, std::cout, std::cerr);
}

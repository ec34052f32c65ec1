#include <string>
#include <vector>

#include <coprime_lab/cli.hpp>

int main(int argc, char** argv) {
    return coprime_lab::cli::run(std::vector<std::string>(argv, argv + argc));
}

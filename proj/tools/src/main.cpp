#include "zerosum/cli/job.hpp"
#include "zerosum/error.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using namespace zerosum;
    std::string help;
    std::optional<cli::JobSpec> job;
    try {
        job = cli::parse_command_line(argc, argv, help);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return cli::exit_usage;
    }
    if (!job) {
        std::cout << help;
        return cli::exit_ok;
    }
    const auto result = cli::run(*job);
    if (job->output) {
        std::ofstream out(*job->output);
        if (!(out << result.json)) {
            std::cerr << "cannot write " << *job->output << '\n';
            return cli::exit_usage;
        }
    } else {
        std::cout << result.json;
    }
    if (result.exit_code == cli::exit_usage) std::cerr << "malformed input; see --help\n";
    return result.exit_code;
}

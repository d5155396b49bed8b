// wpgen: exhaustive isomorph-free graph6 streams for the verify harnesses.
// One canonical representative per isomorphism class, one record per line.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wp/enumerate.hpp"

int main(int argc, char** argv) {
    CLI::App app{"emit all graphs (up to isomorphism) as a graph6 stream"};
    int min_n = 1, max_n = 0;
    bool connected = false;
    std::string output;
    app.add_option("--min-n", min_n, "smallest order to emit")->check(CLI::Range(1, 11));
    app.add_option("--max-n", max_n, "largest order to emit")->required()->check(CLI::Range(1, 11));
    app.add_flag("--connected", connected, "connected graphs only");
    app.add_option("-o,--output", output, "output file (default: standard output)");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;
        std::ostream& out = output.empty() ? std::cout : (file.open(output), file);
        if (!out) throw std::runtime_error("cannot write " + output);
        for (const auto& rec : wp::gen::graph6_stream(min_n, max_n, connected)) out << rec << '\n';
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

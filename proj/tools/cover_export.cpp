// cover-export: print a built cover graph in DOT form for external viewers.
//
//   cover-export -n N            open cover with N middle blocks
//   cover-export -m M -n N       closed cover glued from both sides

#include <iostream>

#include <CLI11.hpp>

#include "kleinian/covergraph.hpp"

int main(int argc, char** argv) {
    CLI::App app{"export cover graphs as DOT"};
    int n = 1;
    int m = 0;
    app.add_option("-n", n, "number of middle blocks")->required()->check(CLI::PositiveNumber);
    app.add_option("-m", m, "mirror-side blocks (0 = open cover)")
        ->check(CLI::NonNegativeNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        kleinian::CoverGraph g = m > 0 ? kleinian::build_closed(m, n) : kleinian::build_n(n);
        std::cout << kleinian::to_dot(g);
    } catch (const kleinian::InvalidParameter& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

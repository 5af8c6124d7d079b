// End-to-end acceptance run: one line per criterion, nonzero exit on any
// unexpected failure. Documented divergences print as expected-fail and do
// not spoil the run; the README describes each one.
#include <cstdio>
#include <string>

#include "clpolar/verify/acceptance.hpp"

int main(int argc, char** argv) {
    std::string scope = argc > 1 ? argv[1] : "all";
    try {
        auto results = clpolar::verify::run_acceptance(scope);
        std::fputs(clpolar::verify::manifest_text(results).c_str(), stdout);
        return clpolar::verify::all_passing(results) ? 0 : 1;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}

#include <cstdio>
#include <cstring>

#include "hypack/acceptance.hpp"

int main(int argc, char** argv) {
    hypack::AcceptanceOptions opts;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--tamper") == 0) opts.tamper = true;
    const auto results = hypack::run_acceptance(opts);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s\n", hypack::format_line(r).c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}

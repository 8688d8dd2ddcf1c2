#include "output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace bpswf::cli {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

void write_output(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw UsageError("cannot open output file '" + path + "'");
    out << text;
    if (!out)
        throw UsageError("failed writing output file '" + path + "'");
}

} // namespace bpswf::cli

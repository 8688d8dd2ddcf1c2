#ifndef BPSWF_TOOLS_OUTPUT_HPP
#define BPSWF_TOOLS_OUTPUT_HPP

#include <stdexcept>
#include <string>

namespace bpswf::cli {

inline constexpr int kSchemaVersion = 1;

/// Bad flags or values; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Round-trip safe decimal (17 significant digits).
std::string format_double(double x);

/// Writes `text` to `path`, or to stdout when path is "-".
void write_output(const std::string &path, const std::string &text);

} // namespace bpswf::cli

#endif

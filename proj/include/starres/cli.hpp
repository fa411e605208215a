#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace starres {

struct RunConfig {
    std::string command;
    std::vector<std::string> positional;
    std::optional<std::string> p;
    std::optional<std::string> lambda;
    std::optional<std::string> x;
    std::optional<long long> c;
    std::optional<std::string> input_path;
    std::optional<std::string> inline_json;
    std::string format = "json";
    int l_max = 8;
    std::uint64_t seed = 0;
    int max_degree = 12;
    std::optional<int> m;
    int r_max = 40;
    int samples = 20;
};

// Exit codes: 0 success, 1 domain error, 2 parse error, 3 sweep disagreement.
int run(const RunConfig& config, std::ostream& out);

// Full command line entry point, including STARRES_SEED handling.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace starres

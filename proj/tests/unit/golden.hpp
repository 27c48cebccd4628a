#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pclosed::testing {

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    std::string expected;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Reads <dir>/manifest.txt: "name arg..." per line, '#' starts a comment line.
inline std::vector<GoldenCase> load_golden(const std::string& dir) {
    std::istringstream manifest(slurp(dir + "/manifest.txt"));
    std::vector<GoldenCase> cases;
    for (std::string line; std::getline(manifest, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream words(line);
        GoldenCase c;
        if (!(words >> c.name)) continue;
        for (std::string w; words >> w;) c.args.push_back(w);
        c.expected = slurp(dir + "/" + c.name + ".out");
        cases.push_back(std::move(c));
    }
    return cases;
}

}  // namespace pclosed::testing

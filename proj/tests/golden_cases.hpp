#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace sl2::test {

struct GoldenCase {
    std::string name;
    int exit_status;
    std::vector<std::string> args;
};

inline std::vector<GoldenCase> load_golden_cases(const std::string& dir)
{
    std::ifstream in(dir + "/cases.txt");
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        GoldenCase c;
        std::string status, args;
        std::getline(fields, c.name, '|');
        std::getline(fields, status, '|');
        std::getline(fields, args);
        c.exit_status = std::stoi(status);
        std::istringstream words(args);
        for (std::string w; words >> w;)
            c.args.push_back(w);
        cases.push_back(std::move(c));
    }
    return cases;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace sl2::test

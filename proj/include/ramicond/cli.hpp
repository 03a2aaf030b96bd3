#ifndef RAMICOND_CLI_HPP_
#define RAMICOND_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ramicond::cli {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_computation = 3;

/* args excludes the program name; errors go to err as one JSON object */
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}

#endif

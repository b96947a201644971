#pragma once

// Command-line front end. `cli_main` parses arguments and calls `run`; both write to the
// given streams so the front end can be driven in-process.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gralg::cli {

struct Request {
  std::string command;  // classify | decompose | loop | codes | verify | table
  std::string family;   // D1..D5, D5xC; for `loop` a class L1..L7
  std::vector<int> ms;
  std::vector<int> exps;            // `codes`: log2 orders of the cyclic factors
  std::vector<std::string> fields;  // field tags; empty means Q (verify: a default list)
  std::string format;               // json | tsv; empty picks the command default
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> ceiling;
  std::string table;  // tab1 | tab2 | cases
  bool brute = false;   // classify/decompose: count by enumeration
  bool check = false;   // loop: also run the Moufang identity check
  bool report = false;  // table: per-cell report instead of the derived table
};

int run(const Request& req, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gralg::cli

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wnrep {

struct Options {
  std::string P, V, S;
  long window = 4;
  long margin = 0;
  int gen_degree = 2;
  int samples = 20;
  std::string format = "json";  // json | csv
  unsigned long long seed = 1;
  int at = 1;                    // 1-based coordinate for localize/twist
  std::string elem = "x";        // x | d
  std::string exp = "0";
  int n = 0, p = 0, m = 0;
  std::vector<int> k_blocks;
  std::string start = "random";  // closure seed: random | constant | derham
  int threads = 0;               // 0: WNREP_THREADS or 1
};

struct Report {
  std::string text;
  bool pass = true;
};

const std::vector<std::string>& command_names();

/// Runs one command; errors propagate as wnrep::Error.
Report run(const std::string& command, const Options& opt);

/// Worker count: opt.threads if positive, else WNREP_THREADS, else 1.
int thread_count(const Options& opt);

/// Calls fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace wnrep

#include <iostream>
#include <string>
#include <vector>

#include "koethe/cli.hpp"

namespace {

const char* kUsage = R"(usage: koethe <command> [flags] <input>

commands
  classify FILE            component diagram types and finiteness
  indecs FILE              indecomposable dimension vectors via reflections
  roots FILE               positive roots (Dynkin components only)
  koethe FILE              Koethe decision (--mode hereditary|rsz)
  separated FILE           emit the separated quiver
  reps FILE                matrix-engine enumeration with tops (simply laced)
  crosscheck FILE          diagram decision vs brute-force enumeration
  dimseq validate SEQ      run the dimension-sequence recurrences
  dimseq list M [--cap N]  all classes of length M
  dimseq indecs SEQ        rank-2 indecomposable dimension vectors

flags
  --json                   JSON output
  --expect yes|no          exit 2 when the koethe verdict differs
  --max-steps N            reflection/orbit iteration cap
  --cap N                  entry cap for dimseq list
FILE may be - for stdin.
)";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << kUsage;
    return args.empty() ? 1 : 0;
  }
  return koethe::cli::run_command(args, std::cin, std::cout, std::cerr);
}

#include <cstdlib>
#include <iostream>
#include <thread>

#include "bmaps/formats.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace bmaps;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* e = std::getenv("BMAPS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (*end || v < 1 || v > 256) {
      std::cerr << "bmaps: BMAPS_THREADS must be an integer in [1, 256]\n";
      return 2;
    }
    threads = static_cast<int>(v);
  }
  try {
    std::string help;
    auto c = cli::parse_config(std::vector<std::string>(argv + 1, argv + argc), &help);
    if (!help.empty()) {
      std::cout << help;
      return 0;
    }
    return cli::run(c, std::cout, std::cerr, threads);
  } catch (const cli::UsageError& e) {
    std::cerr << "bmaps: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "bmaps: bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "FAILED: " << e.what() << "\n";
    std::cerr << "first failing check: " << e.what() << "\n";
    return 1;
  }
}

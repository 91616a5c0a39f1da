#include <veritool/cli.hpp>
#include <veritool/sweep.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  veritool::Invocation inv;
  try {
    inv = veritool::parse_invocation(args);
  } catch (const veritool::HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const veritool::UsageError& e) {
    std::cerr << "veritool: " << e.what() << "\nRun `veritool --help` for usage.\n";
    return 2;
  }

  if (inv.command == veritool::Command::list) {
    for (const auto& c : veritool::registered_checks()) {
      std::cout << c.id << (c.prime_range ? "  [primes " : "  [") << c.default_min << ".." << c.default_max
                << "]" << (c.takes_family ? "  --family" : "") << "  " << c.summary << '\n';
    }
    return 0;
  }

  const veritool::SweepReport report = veritool::run_sweep(inv.spec);
  return veritool::emit_report(report, inv.spec.format, inv.spec.out_path);
}

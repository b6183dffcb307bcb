// Regenerates the shipped derivation script files under scripts/.

#include <fstream>
#include <iostream>

#include "prok/derivation_io.hpp"
#include "prok/scripts.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "scripts";
  for (const std::string& name : prok::scripts::builtin_script_names()) {
    prok::DerivationScript script = prok::scripts::build_script(name);
    prok::CheckReport report = prok::check_derivation(script);
    if (!report.ok) {
      std::cerr << "generated script does not check: " << name << "\n";
      return 1;
    }
    std::string path = dir + "/" + name + ".json";
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    f << prok::to_json(script).dump(1) << "\n";
    std::cout << path << ": " << script.steps.size() << " steps, conclusion ("
              << report.conclusion->first.to_string() << ", "
              << report.conclusion->second.to_string() << ")\n";
  }
  return 0;
}

// Writes the reference nets into a directory (default: ./fixtures).

#include <filesystem>
#include <fstream>
#include <iostream>

#include "petristruct/models.hpp"

namespace fs = std::filesystem;
using namespace petristruct;

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("fixtures");
  fs::create_directories(dir);

  NetDocument tn2 = models::tn(2, 5, 0).doc;
  tn2.markings = {{"m0", {5, 0}}, {"m_multiple", {4, 0}}, {"m_low", {1, 0}}};
  tn2.init = {"m0"};

  const std::vector<std::pair<std::string, NetDocument>> files{
      {"tn2", tn2},
      {"tn3", models::tn(3, 7, 0).doc},
      {"tned3", models::tned(3, 4, 1).doc},
      {"cs_threshold", models::fig_cs_threshold().doc},
      {"fq_inv", models::fig_fq_inv().doc},
      {"producer", models::producer().doc},
      {"state_machine_witness", models::fig_state_machine_witness().doc},
      {"home_state_witness", models::fig_home_state_witness().doc},
  };
  for (const auto& [name, doc] : files) {
    const fs::path path = dir / (name + ".net");
    std::ofstream(path) << serialize_net(doc);
    std::cout << path.string() << "\n";
  }
}

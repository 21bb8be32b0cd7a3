#include <iostream>

#include "gk/verify.hpp"

int main(int argc, char** argv) {
  std::optional<gk::RunConfig> config;
  std::string info;
  try {
    config = gk::parse_config(argc, argv, &info);
  } catch (const gk::ConfigError& e) {
    std::cerr << "gkverify: " << e.what() << "\n";
    return 2;
  }
  if (!config) {
    std::cout << info;
    return 0;
  }
  try {
    const gk::Report rep = gk::run(*config);
    std::cout << (config->format == gk::OutputFormat::Json ? gk::to_json(rep) : gk::to_text(rep));
    return rep.ok() ? 0 : 1;
  } catch (const gk::ConfigError& e) {
    std::cerr << "gkverify: " << e.what() << "\n";
    return 2;
  }
}

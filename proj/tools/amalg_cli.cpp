#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <amalg/harness.hpp>

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<std::uint64_t> parse_primes(const std::string& text)
{
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw amalg::Error(amalg::Errc::invalid_config, "bad prime list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// "K", "Lambda", "K_3" or "K3", "G_2" or "G2".
amalg::Subgroup parse_subgroup(const std::string& text)
{
  if (text == "K")
    return amalg::Subgroup::k();
  if (text == "Lambda" || text == "L")
    return amalg::Subgroup::lambda();
  if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'G')) {
    auto digits = text.substr(text[1] == '_' ? 2 : 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      auto n = static_cast<unsigned>(std::stoul(digits));
      return text[0] == 'K' ? amalg::Subgroup::k_from(n) : amalg::Subgroup::g_level(n);
    }
  }
  throw amalg::Error(amalg::Errc::invalid_config, "unknown subgroup '" + text + "'");
}

void write_file(const std::string& path, const amalg::ordered_json& j)
{
  std::ofstream out(path);
  if (!out)
    throw amalg::Error(amalg::Errc::invalid_config, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Normal forms and checks for the amalgam tower over K x| SL(3,Z)"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string primes_text;
  amalg::Config cfg;
  std::string out_path, out_dir;
  app.add_option("--primes", primes_text, "Comma-separated distinct primes (default 2,3,5,7,11,13,17,19)");
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--tolerance", cfg.tolerance, "Floating-point tolerance for Fourier checks");
  app.add_option("--size-guard", cfg.size_guard, "Largest enumerable product domain");
  app.add_option("--radius", cfg.radius, "Ball radius override");
  app.add_option("--level", cfg.level, "Restrict level-indexed checks to this level");
  app.add_option("--samples", cfg.samples, "Sample count override");
  app.add_option("--out", out_path, "Write the report to this file");
  app.add_option("--out-dir", out_dir, "Write one report per suite into this directory");

  auto* elem = app.add_subcommand("elem", "Element operations");
  elem->require_subcommand(1);
  elem->fallthrough();
  std::string a, b, subgroup;
  auto* reduce = elem->add_subcommand("reduce", "Print the normal form of an element");
  reduce->add_option("element", a)->required();
  auto* mul = elem->add_subcommand("mul", "Product a*b");
  mul->add_option("a", a)->required();
  mul->add_option("b", b)->required();
  auto* inv = elem->add_subcommand("inv", "Inverse");
  inv->add_option("element", a)->required();
  auto* conj = elem->add_subcommand("conj", "h g h^-1");
  conj->add_option("g", a)->required();
  conj->add_option("by", b, "Conjugating element h")->required();
  auto* member = elem->add_subcommand("member", "Subgroup membership");
  member->add_option("element", a)->required();
  member->add_option("--in", subgroup, "K, K_n, Lambda or G_n")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<std::string> choices = amalg::suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(choices));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!primes_text.empty())
      cfg.primes = amalg::PrimeSeq(parse_primes(primes_text));
    cfg.validate();
  } catch (const amalg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (elem->parsed()) {
    try {
      amalg::Tower tower(cfg.primes);
      auto x = amalg::parse_element(tower, a);
      if (reduce->parsed())
        std::cout << amalg::format(x) << '\n';
      else if (mul->parsed())
        std::cout << amalg::format(tower.mul(x, amalg::parse_element(tower, b))) << '\n';
      else if (inv->parsed())
        std::cout << amalg::format(tower.inv(x)) << '\n';
      else if (conj->parsed())
        std::cout << amalg::format(tower.conj(x, amalg::parse_element(tower, b))) << '\n';
      else
        std::cout << (tower.member(x, parse_subgroup(subgroup)) ? "true" : "false") << '\n';
    } catch (const amalg::Error& e) {
      std::cerr << "error (" << amalg::to_string(e.code()) << "): " << e.what() << '\n';
      return kUsage;
    }
    return kPass;
  }

  std::vector<amalg::Report> reports;
  try {
    if (suite == "all")
      reports = amalg::run_all(cfg);
    else
      reports.push_back(amalg::run_suite(suite, cfg));

    bool passed = true;
    amalg::ordered_json combined;
    if (suite == "all") {
      combined["suite"] = "all";
      combined["reports"] = amalg::ordered_json::array();
    }
    for (const auto& r : reports) {
      passed = passed && r.passed();
      std::cerr << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.count(amalg::Outcome::pass)
                << " pass, " << r.count(amalg::Outcome::fail) << " fail, " << r.count(amalg::Outcome::skipped)
                << " skipped, " << r.seconds << " s)\n";
      for (const auto& c : r.checks)
        if (c.outcome != amalg::Outcome::pass)
          std::cerr << "  " << amalg::to_string(c.outcome) << ": " << c.name << ' ' << c.parameters.dump()
                    << (c.reason.empty() ? "" : " - " + c.reason) << '\n';
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file((std::filesystem::path(out_dir) / (r.suite + ".json")).string(), r.to_json());
      }
      if (suite == "all")
        combined["reports"].push_back(r.to_json());
      else
        combined = r.to_json();
    }
    if (suite == "all")
      combined["outcome"] = passed ? "pass" : "fail";
    if (!out_path.empty())
      write_file(out_path, combined);
    else if (out_dir.empty())
      std::cout << combined.dump(2) << '\n';
    return passed ? kPass : kFail;
  } catch (const amalg::Error& e) {
    std::cerr << "error (" << amalg::to_string(e.code()) << "): " << e.what() << '\n';
    return kUsage;
  }
}

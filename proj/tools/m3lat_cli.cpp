// m3lat: batch driver for the lemma suites, Banaschewski exploration and
// lattice export. Exit codes: 0 pass, 1 verification failure, 2 usage/error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "m3lat/banfn.hpp"
#include "m3lat/finlat.hpp"
#include "m3lat/json_io.hpp"
#include "m3lat/verify.hpp"

namespace {

using m3lat::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw m3lat::SchemaError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return m3lat::parse_json_text(buf.str());
  } catch (const m3lat::SchemaError& e) {
    throw m3lat::SchemaError(path + ": " + e.what());
  }
}

m3lat::FiniteLattice read_lattice(const std::string& path) {
  return m3lat::lattice_from_json(read_json_file(path), path);
}

void emit(const json& j, const std::string& json_out) {
  const std::string text = j.dump(2);
  if (json_out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(json_out);
  if (!out) throw std::runtime_error(json_out + ": cannot write");
  out << text << '\n';
}

m3lat::Mask parse_mask(const std::string& text) {
  m3lat::Mask mask;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed mask entry: " + item);
    mask.push_back(v);
  }
  std::sort(mask.begin(), mask.end());
  mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
  return mask;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m3lat: the lattice S, its Boolean sublattices E and B, and their verification"};
  app.require_subcommand(1);

  m3lat::VerifyParams params;
  std::string lemma;
  std::string json_out;
  bool no_elapsed = false;
  auto* verify = app.add_subcommand("verify", "Run a lemma suite (or 'all')");
  verify->add_option("lemma", lemma, "Lemma id or 'all'")->required();
  verify->add_option("--n", params.n, "Finite universe size for subspace suites");
  verify->add_option("--p", params.p, "Prime field modulus");
  verify->add_option("--samples", params.samples, "Sample count for sampled suites");
  verify->add_option("--seed", params.seed, "RNG seed");
  verify->add_option("--bound", params.bound, "Support bound for complement searches");
  verify->add_option("--json-out", json_out, "Write the report to this file");
  verify->add_flag("--no-elapsed", no_elapsed, "Omit elapsed_ms, for byte-comparable reports");

  std::string lattice_file;
  bool enumerate = false;
  std::string range_mask;
  auto* banfn = app.add_subcommand("banfn", "Banaschewski functions on a lattice");
  banfn->add_option("lattice", lattice_file, "Lattice JSON file")->required();
  auto* enum_flag = banfn->add_flag("--enumerate", enumerate, "List all Banaschewski functions");
  banfn->add_option("--range-mask", range_mask, "Search for a function with this exact range (e.g. 0,1,2,4)")
      ->excludes(enum_flag);
  banfn->add_option("--json-out", json_out, "Write the report to this file");

  auto* m3 = app.add_subcommand("m3", "Build M3[L] from a lattice");
  m3->add_option("lattice", lattice_file, "Lattice JSON file")->required();
  m3->add_option("--json-out", json_out, "Write the lattice to this file");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram of a lattice in DOT");
  dot->add_option("lattice", lattice_file, "Lattice JSON file")->required();

  auto* check = app.add_subcommand("check-lattice", "Validate a lattice and report its properties");
  check->add_option("lattice", lattice_file, "Lattice JSON file")->required();
  check->add_option("--json-out", json_out, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kError;
  }

  try {
    if (*verify) {
      std::vector<m3lat::VerificationReport> reports;
      if (lemma == "all") {
        reports = m3lat::run_all(params);
      } else if (m3lat::is_known_lemma(lemma)) {
        reports.push_back(m3lat::run_lemma(lemma, params));
      } else {
        std::cerr << "unknown lemma id: " << lemma << "\nknown:";
        for (const auto& id : m3lat::lemma_ids()) std::cerr << ' ' << id;
        std::cerr << '\n';
        return kError;
      }
      bool all_pass = true;
      json out = json::array();
      for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        out.push_back(m3lat::to_json(r, !no_elapsed));
      }
      emit(lemma == "all" ? json{{"pass", all_pass}, {"reports", out}} : out[0], json_out);
      return all_pass ? kPass : kFail;
    }

    if (*banfn) {
      const auto l = read_lattice(lattice_file);
      if (!range_mask.empty()) {
        const auto mask = parse_mask(range_mask);
        const auto f = m3lat::is_range_of_some_banaschewski(l, mask);
        json j{{"mask", mask}, {"found", f.has_value()}};
        if (f) j["function"] = m3lat::to_json(*f);
        emit(j, json_out);
        return kPass;
      }
      const auto result = m3lat::enumerate_banaschewski(l);
      json fns = json::array();
      for (const auto& f : result.functions) {
        const auto range = m3lat::range_of(l, f);
        fns.push_back({{"table", f.table}, {"range", range.image}, {"range_is_sublattice", range.is_sublattice}});
      }
      json j{{"count", result.functions.size()}, {"functions", fns}};
      if (!result.note.empty()) j["note"] = result.note;
      emit(j, json_out);
      return kPass;
    }

    if (*m3) {
      const auto result = m3lat::m3_of(read_lattice(lattice_file));
      json j = m3lat::to_json(result.lattice);
      j["triples"] = result.triples;
      emit(j, json_out);
      return kPass;
    }

    if (*dot) {
      std::cout << m3lat::to_dot(read_lattice(lattice_file));
      return kPass;
    }

    if (*check) {
      const auto l = read_lattice(lattice_file);
      json j{{"n", l.size()},
             {"bottom", l.bottom()},
             {"top", l.top()},
             {"distributive", m3lat::is_distributive(l)},
             {"modular", m3lat::is_modular(l)},
             {"complemented", m3lat::is_complemented(l)},
             {"boolean", m3lat::is_boolean(l)}};
      const auto arg = m3lat::is_arguesian(l, 1'000'000, params.seed);
      j["arguesian"] = {{"holds", arg.holds},
                        {"mode", arg.mode == m3lat::CheckMode::Exhaustive ? "exhaustive" : "sampled"},
                        {"checked", arg.checked}};
      emit(j, json_out);
      return kPass;
    }
  } catch (const m3lat::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kError;
  } catch (const m3lat::LatticeError& e) {
    std::cerr << "lattice error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

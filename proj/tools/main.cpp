#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dubrovnik/bounds.hpp"
#include "dubrovnik/diagram.hpp"
#include "dubrovnik/errors.hpp"
#include "dubrovnik/fixtures.hpp"
#include "dubrovnik/front.hpp"
#include "dubrovnik/kauffman.hpp"

#ifndef DUBROVNIK_FIXTURE_DIR
#define DUBROVNIK_FIXTURE_DIR "fixtures"
#endif

using namespace dubrovnik;

namespace {

enum Exit { kOk = 0, kViolation = 1, kParse = 2, kValidation = 3, kIo = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception&) {
    throw InputError("cannot read " + path);
  }
}

bool looks_like_pd(const std::string& path, const std::string& text) {
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".pd") == 0) return true;
  if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".front") == 0) return false;
  return text.find('[') != std::string::npos;
}

Diagram load_diagram(const std::string& path) {
  const std::string text = load(path);
  return looks_like_pd(path, text) ? parse_pd(text) : resolve_to_diagram(parse_front(text));
}

FrontWord load_front(const std::string& path) { return parse_front(load(path)); }

std::string fixture_dir() {
  if (const char* env = std::getenv("DUBROVNIK_FIXTURES")) return env;
  return DUBROVNIK_FIXTURE_DIR;
}

void print_list(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dubrovnik polynomial and Legendrian front invariants"};
  app.require_subcommand(1);

  std::string input;
  bool reduced = false;
  auto* kauffman = app.add_subcommand("kauffman", "print K of a PD or front file");
  kauffman->add_option("file", input)->required();
  kauffman->add_flag("--reduced", reduced, "divide by delta");

  bool per_component = false;
  auto* tb = app.add_subcommand("tb", "Thurston-Bennequin number of a front");
  tb->add_option("file", input)->required();
  tb->add_flag("--per-component", per_component);

  auto* rot = app.add_subcommand("rot", "rotation number of a front");
  rot->add_option("file", input)->required();
  rot->add_flag("--per-component", per_component);

  std::size_t fuzz = 0;
  std::uint64_t seed = 0;
  std::size_t max_events = 14;
  bool json = false;
  auto* check = app.add_subcommand("check", "bound report for a front, or a fuzz campaign");
  check->add_option("file", input);
  check->add_flag("--per-component", per_component);
  check->add_flag("--json", json);
  check->add_option("--fuzz", fuzz, "number of random fronts");
  check->add_option("--seed", seed);
  check->add_option("--max-events", max_events);

  auto* resolve = app.add_subcommand("resolve", "PD code of a front's resolution");
  resolve->add_option("file", input)->required();

  std::string out_path;
  auto* render = app.add_subcommand("render", "SVG picture of a front");
  render->add_option("file", input)->required();
  render->add_option("--out", out_path)->required();

  std::string dir = fixture_dir();
  auto* fixtures = app.add_subcommand("fixtures", "fixture corpus");
  fixtures->add_option("--dir", dir);
  fixtures->require_subcommand(1);
  auto* fx_list = fixtures->add_subcommand("list");
  auto* fx_verify = fixtures->add_subcommand("verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*kauffman) {
      const Diagram d = load_diagram(input);
      std::cout << format_poly(reduced ? kauffman_reduced(d) : kauffman_unreduced(d)) << '\n';
    } else if (*tb || *rot) {
      const LegendrianInvariants inv = legendrian_invariants(load_front(input));
      if (per_component)
        print_list(*tb ? inv.component_tb : inv.component_rotation);
      else
        std::cout << (*tb ? inv.tb : inv.rotation) << '\n';
    } else if (*check) {
      if (fuzz > 0) {
        const FuzzResult r = fuzz_bound(fuzz, seed, max_events);
        std::cout << "fronts: " << r.fronts << '\n'
                  << "violations: " << r.violations << '\n'
                  << "min_slack: " << r.min_slack << '\n';
        for (const auto& f : r.violating_fronts) std::cout << "violation: " << f;
        return r.violations == 0 ? kOk : kViolation;
      }
      if (input.empty()) {
        std::cerr << "check: a front file or --fuzz is required\n";
        return kParse;
      }
      const BoundReport r = check_front(load_front(input), input);
      if (json)
        std::cout << report_json(r).dump(2) << '\n';
      else
        std::cout << report_text(r, per_component);
      return r.satisfied ? kOk : kViolation;
    } else if (*resolve) {
      std::cout << format_pd(resolve_to_diagram(load_front(input))) << '\n';
    } else if (*render) {
      const std::string svg = render_svg(load_front(input));
      std::ofstream out(out_path, std::ios::binary);
      if (!out || !(out << svg) || !out.flush()) throw OutputError("cannot write " + out_path);
    } else if (*fixtures) {
      const FixtureSet set = FixtureSet::load(dir);
      if (*fx_list) {
        for (const auto& f : set.fixtures())
          std::cout << f.name << '\t' << (f.kind == FixtureKind::Pd ? "pd" : "front") << '\t'
                    << f.file.filename().string() << '\n';
      } else if (*fx_verify) {
        bool all = true;
        for (const auto& c : set.verify()) {
          std::cout << (c.ok ? "ok   " : "FAIL ") << c.name;
          for (const auto& why : c.failures) std::cout << "  [" << why << ']';
          std::cout << '\n';
          all = all && c.ok;
        }
        return all ? kOk : kValidation;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << input << ':' << e.what() << '\n';
    return kParse;
  } catch (const InputError& e) {
    std::cerr << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return kValidation;
  } catch (const OutputError& e) {
    std::cerr << e.what() << '\n';
    return kIo;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "manifest: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}

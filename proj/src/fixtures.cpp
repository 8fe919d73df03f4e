#include "dubrovnik/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dubrovnik/bounds.hpp"
#include "dubrovnik/kauffman.hpp"

namespace dubrovnik {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

namespace {

template <typename T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

FixtureSet FixtureSet::load(const std::filesystem::path& dir) {
  FixtureSet set;
  set.dir_ = dir;
  const nlohmann::json manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  for (const auto& entry : manifest.at("fixtures")) {
    Fixture f;
    f.name = entry.at("name").get<std::string>();
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind != "pd" && kind != "front") throw std::runtime_error("fixture " + f.name + ": unknown kind " + kind);
    f.kind = kind == "pd" ? FixtureKind::Pd : FixtureKind::Front;
    f.file = dir / entry.at("file").get<std::string>();
    f.description = entry.value("description", "");
    const nlohmann::json expected = entry.value("expected", nlohmann::json::object());
    f.expected.components = optional_field<int>(expected, "components");
    f.expected.writhe = optional_field<int>(expected, "writhe");
    f.expected.polynomial = optional_field<std::string>(expected, "polynomial");
    f.expected.polynomial_of = optional_field<std::string>(expected, "polynomial_of");
    f.expected.tb = optional_field<int>(expected, "tb");
    f.expected.rotation = optional_field<int>(expected, "rotation");
    f.expected.bound = optional_field<int>(expected, "bound");
    f.expected.component_tb = optional_field<std::vector<int>>(expected, "component_tb");
    f.expected.component_rotation = optional_field<std::vector<int>>(expected, "component_rotation");
    set.fixtures_.push_back(std::move(f));
  }
  return set;
}

const Fixture& FixtureSet::at(const std::string& name) const {
  for (const auto& f : fixtures_)
    if (f.name == name) return f;
  throw std::out_of_range("no fixture named " + name);
}

bool FixtureSet::contains(const std::string& name) const {
  for (const auto& f : fixtures_)
    if (f.name == name) return true;
  return false;
}

std::string FixtureSet::text(const std::string& name) const { return read_file(at(name).file); }

Diagram FixtureSet::diagram(const std::string& name) const {
  const Fixture& f = at(name);
  if (f.kind == FixtureKind::Pd) return parse_pd(text(name));
  return resolve_to_diagram(front(name));
}

FrontWord FixtureSet::front(const std::string& name) const {
  const Fixture& f = at(name);
  if (f.kind != FixtureKind::Front) throw std::invalid_argument("fixture " + name + " is not a front");
  return parse_front(text(name));
}

std::vector<FixtureCheck> FixtureSet::verify() const {
  KauffmanEvaluator evaluator;
  std::vector<FixtureCheck> checks;
  for (const Fixture& f : fixtures_) {
    FixtureCheck check;
    check.name = f.name;
    auto expect = [&](bool ok, const std::string& what) {
      if (!ok) {
        check.ok = false;
        check.failures.push_back(what);
      }
    };
    try {
      const Diagram d = diagram(f.name);
      const ComponentMap map = validate(d);
      const Laurent2Poly k = evaluator.unreduced(d);
      const auto& e = f.expected;
      if (e.components) expect(map.component_count == *e.components, "component count " + std::to_string(map.component_count));
      if (e.writhe) expect(writhe(d) == *e.writhe, "writhe " + std::to_string(writhe(d)));
      if (e.polynomial) expect(k == parse_poly(*e.polynomial), "polynomial " + format_poly(k));
      if (e.polynomial_of)
        expect(k == evaluator.unreduced(diagram(*e.polynomial_of)), "polynomial differs from " + *e.polynomial_of);
      if (e.bound) expect(rudolph_bound(k) == *e.bound, "bound " + std::to_string(rudolph_bound(k)));
      if (f.kind == FixtureKind::Front) {
        const LegendrianInvariants inv = legendrian_invariants(front(f.name));
        if (e.tb) expect(inv.tb == *e.tb, "tb " + std::to_string(inv.tb));
        if (e.rotation) expect(inv.rotation == *e.rotation, "rotation " + std::to_string(inv.rotation));
        if (e.component_tb) expect(inv.component_tb == *e.component_tb, "component tb mismatch");
        if (e.component_rotation) expect(inv.component_rotation == *e.component_rotation, "component rotation mismatch");
        expect(inv.tb <= rudolph_bound(k), "bound violated");
      }
    } catch (const std::exception& ex) {
      expect(false, ex.what());
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace dubrovnik

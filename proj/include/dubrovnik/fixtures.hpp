#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dubrovnik/diagram.hpp"
#include "dubrovnik/front.hpp"

namespace dubrovnik {

enum class FixtureKind { Pd, Front };

struct FixtureExpectations {
  std::optional<int> components;
  std::optional<int> writhe;
  std::optional<std::string> polynomial;
  // Name of a fixture whose polynomial this one must reproduce.
  std::optional<std::string> polynomial_of;
  std::optional<int> tb;
  std::optional<int> rotation;
  std::optional<int> bound;
  std::optional<std::vector<int>> component_tb;
  std::optional<std::vector<int>> component_rotation;
};

struct Fixture {
  std::string name;
  FixtureKind kind = FixtureKind::Pd;
  std::filesystem::path file;
  std::string description;
  FixtureExpectations expected;
};

struct FixtureCheck {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
};

// The fixture corpus described by <dir>/manifest.json.
class FixtureSet {
 public:
  static FixtureSet load(const std::filesystem::path& dir);

  const std::vector<Fixture>& fixtures() const { return fixtures_; }
  const Fixture& at(const std::string& name) const;
  bool contains(const std::string& name) const;

  std::string text(const std::string& name) const;
  // PD fixtures parse directly; fronts are resolved.
  Diagram diagram(const std::string& name) const;
  FrontWord front(const std::string& name) const;

  std::vector<FixtureCheck> verify() const;

 private:
  std::filesystem::path dir_;
  std::vector<Fixture> fixtures_;
};

std::string read_file(const std::filesystem::path& path);

}  // namespace dubrovnik

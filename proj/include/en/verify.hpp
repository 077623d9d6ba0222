#pragma once

#include <cstdint>

#include "en/io.hpp"

namespace en {

struct CheckSuite {
  explicit CheckSuite(std::string n) : name(std::move(n)) {}
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  void add(const std::vector<std::string>& v, const std::string& where);
  void expect(bool ok, const std::string& what);
  Json json() const;
};

// Seeded run of the Hopf, R-matrix, cocycle, orbit, Sym and chi suites.
// Returns one report per suite and sets `ok` when none has violations.
Json verify_all(unsigned n, std::uint64_t seed, const Field& f, bool& ok);

}  // namespace en

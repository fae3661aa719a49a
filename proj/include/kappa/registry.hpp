#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kappa/forms.hpp"

namespace kappa {

// Built-in fixture spaces with their known kappa vectors, so golden tests
// and the CLI need no external data files.
struct RegistryEntry {
    std::string name;
    std::string description;
    std::function<QuadricSpace<Rational>()> build;
    std::vector<long> expected_kappa;
    bool expected_obstructed;
};

const std::vector<RegistryEntry>& example_registry();

const RegistryEntry& find_example(const std::string& name);

}  // namespace kappa

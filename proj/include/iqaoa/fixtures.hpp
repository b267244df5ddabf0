#pragma once

#include "iqaoa/circuit.hpp"
#include "iqaoa/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iqaoa {

struct Fixture {
    std::string_view name;
    std::string_view text;
    Mixer default_mixer;
};

/// Instances bundled into the library from fixtures/.
const std::vector<Fixture>& fixtures();
std::optional<Fixture> find_fixture(std::string_view name);
/// Throws ValidationError for unknown names.
JsspInstance load_fixture(std::string_view name);

}  // namespace iqaoa

#pragma once

#include <stdexcept>
#include <string>

namespace clawchrome {

// A coloring certificate (interval representation, 2-join labeling, clique
// cover, embedding) failed re-validation against the host graph.
struct invalid_certificate : std::invalid_argument {
    explicit invalid_certificate(const std::string& what) : std::invalid_argument(what) {}
};

// A generator produced an object that fails its own validation gate.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace clawchrome

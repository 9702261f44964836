#pragma once

#include <stdexcept>
#include <string>

namespace waring {

/* malformed input text or documents */
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* operation refused because the form has a repeated factor; names the factor */
struct squarefree_error : std::runtime_error {
    explicit squarefree_error(const std::string& factor)
        : std::runtime_error("form has a repeated factor: " + factor), repeated_factor(factor) {}
    std::string repeated_factor;
};

/* a numeric iteration did not reach the requested precision */
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* a decomposition search exhausted its candidate budget */
struct search_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace waring

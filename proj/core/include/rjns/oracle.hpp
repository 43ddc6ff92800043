// Irreversible reference implementations used as ground truth. These are
// deliberately host-level code, independent of the reversible engine.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "rjns/ast.hpp"

namespace rjns {

struct LinearAnswer {
    std::optional<std::size_t> first_index;
    std::size_t count = 0;
    bool found = false;
};

/// One-pass linear search: first index, occurrence count, presence flag.
LinearAnswer linear_oracle(std::span<const Int> keys, Int key);

class UnsortedInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binary search over a strictly ascending array; throws UnsortedInputError
/// when the precondition fails.
std::optional<std::size_t> binary_oracle(std::span<const Int> sorted_keys, Int key);

}  // namespace rjns

// The mutable state of an execution: named 64-bit scalar cells and
// fixed-length arrays of 64-bit integers.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rjns/ast.hpp"

namespace rjns {

/// Metrics role of a cell, assigned per run from the manifest.
enum class CellRole : std::uint8_t { Aux, InputArray, InputScalar, Output };

struct Cell {
    Int value = 0;            // scalar payload
    std::vector<Int> elems;   // array payload
    bool is_array = false;
    CellRole role = CellRole::Aux;

    bool bit_equal(const Cell& other) const {
        if (is_array != other.is_array) return false;
        return is_array ? elems == other.elems : value == other.value;
    }
};

/// Insertion-ordered map name -> cell with stable cell addresses. Rebinding
/// an existing name keeps the cell's address, so prepared runs stay valid.
class Store {
public:
    Store() = default;
    Store(const Store& other) { copy_from(other); }
    Store& operator=(const Store& other) {
        if (this != &other) {
            cells_.clear();
            copy_from(other);
        }
        return *this;
    }
    Store(Store&&) noexcept = default;
    Store& operator=(Store&&) noexcept = default;

    Cell& set_scalar(std::string name, Int value);
    Cell& set_array(std::string name, std::vector<Int> elems);

    Cell* find(std::string_view name);
    const Cell* find(std::string_view name) const;

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    struct Entry {
        std::string name;
        std::unique_ptr<Cell> cell;
    };
    const std::vector<Entry>& entries() const { return cells_; }

    /// Bit-exact equality of values, insensitive to binding order.
    bool bit_equal(const Store& other) const;

private:
    std::vector<Entry> cells_;

    Cell& upsert(std::string name);
    void copy_from(const Store& other);
};

}  // namespace rjns

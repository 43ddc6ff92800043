#include "rjns/store.hpp"

namespace rjns {

Cell& Store::upsert(std::string name) {
    if (Cell* existing = find(name)) return *existing;
    cells_.push_back(Entry{std::move(name), std::make_unique<Cell>()});
    return *cells_.back().cell;
}

Cell& Store::set_scalar(std::string name, Int value) {
    Cell& c = upsert(std::move(name));
    c.is_array = false;
    c.value = value;
    c.elems.clear();
    return c;
}

Cell& Store::set_array(std::string name, std::vector<Int> elems) {
    Cell& c = upsert(std::move(name));
    c.is_array = true;
    c.value = 0;
    c.elems = std::move(elems);
    return c;
}

Cell* Store::find(std::string_view name) {
    for (auto& e : cells_) {
        if (e.name == name) return e.cell.get();
    }
    return nullptr;
}

const Cell* Store::find(std::string_view name) const {
    for (const auto& e : cells_) {
        if (e.name == name) return e.cell.get();
    }
    return nullptr;
}

bool Store::bit_equal(const Store& other) const {
    if (cells_.size() != other.cells_.size()) return false;
    for (const auto& e : cells_) {
        const Cell* c = other.find(e.name);
        if (!c || !e.cell->bit_equal(*c)) return false;
    }
    return true;
}

void Store::copy_from(const Store& other) {
    cells_.reserve(other.cells_.size());
    for (const auto& e : other.cells_) {
        cells_.push_back(Entry{e.name, std::make_unique<Cell>(*e.cell)});
    }
}

}  // namespace rjns

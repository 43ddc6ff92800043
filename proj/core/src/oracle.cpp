#include "rjns/oracle.hpp"

namespace rjns {

LinearAnswer linear_oracle(std::span<const Int> keys, Int key) {
    LinearAnswer answer;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keys[i] == key) {
            if (!answer.found) {
                answer.first_index = i;
                answer.found = true;
            }
            ++answer.count;
        }
    }
    return answer;
}

std::optional<std::size_t> binary_oracle(std::span<const Int> sorted_keys, Int key) {
    for (std::size_t i = 1; i < sorted_keys.size(); ++i) {
        if (sorted_keys[i - 1] >= sorted_keys[i]) {
            throw UnsortedInputError("binary_oracle requires strictly ascending keys");
        }
    }
    std::size_t lo = 0;
    std::size_t hi = sorted_keys.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (sorted_keys[mid] == key) return mid;
        if (sorted_keys[mid] < key) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return std::nullopt;
}

}  // namespace rjns

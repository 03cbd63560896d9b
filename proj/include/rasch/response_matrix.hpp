#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rasch {

// One cell of a binary response matrix.  Missing means the item was never
// shown to the user; the assignment pattern is implied by non-missing cells.
enum class Response : std::int8_t {
  negative = 0,
  positive = 1,
  missing = -1,
};

// n_users x n_items response matrix.  Immutable in spirit: filled once during
// construction/ingestion, then only read.  Users with no assigned items are
// kept so row indices stay stable across joins.
class ResponseMatrix {
 public:
  ResponseMatrix(std::size_t n_users, std::size_t n_items);
  ResponseMatrix(std::size_t n_users, std::size_t n_items, std::vector<std::string> item_ids);

  std::size_t n_users() const noexcept { return n_users_; }
  std::size_t n_items() const noexcept { return n_items_; }

  Response at(std::size_t user, std::size_t item) const {
    return static_cast<Response>(cells_[user * n_items_ + item]);
  }
  void set(std::size_t user, std::size_t item, Response value) {
    cells_[user * n_items_ + item] = static_cast<std::int8_t>(value);
  }
  bool assigned(std::size_t user, std::size_t item) const {
    return cells_[user * n_items_ + item] >= 0;
  }

  // Raw row access for counting kernels; values are 0, 1 or -1 (missing).
  const std::int8_t* row(std::size_t user) const { return cells_.data() + user * n_items_; }

  const std::vector<std::string>& item_ids() const noexcept { return item_ids_; }

  std::size_t assigned_count() const;

  bool operator==(const ResponseMatrix&) const = default;

 private:
  std::size_t n_users_;
  std::size_t n_items_;
  std::vector<std::string> item_ids_;
  std::vector<std::int8_t> cells_;
};

// "item1", "item2", ... used when a format carries no header.
std::vector<std::string> default_item_ids(std::size_t n_items);

}  // namespace rasch

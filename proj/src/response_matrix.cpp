#include "rasch/response_matrix.hpp"

#include "rasch/errors.hpp"

namespace rasch {

ResponseMatrix::ResponseMatrix(std::size_t n_users, std::size_t n_items)
    : ResponseMatrix(n_users, n_items, default_item_ids(n_items)) {}

ResponseMatrix::ResponseMatrix(std::size_t n_users, std::size_t n_items,
                               std::vector<std::string> item_ids)
    : n_users_(n_users),
      n_items_(n_items),
      item_ids_(std::move(item_ids)),
      cells_(n_users * n_items, static_cast<std::int8_t>(Response::missing)) {
  if (n_users_ < 1) throw ContractError("response matrix needs at least one user");
  if (n_items_ < 2) throw ContractError("response matrix needs at least two items");
  if (item_ids_.size() != n_items_)
    throw ContractError("item id count does not match item count");
}

std::size_t ResponseMatrix::assigned_count() const {
  std::size_t count = 0;
  for (std::int8_t cell : cells_) count += cell >= 0;
  return count;
}

std::vector<std::string> default_item_ids(std::size_t n_items) {
  std::vector<std::string> ids;
  ids.reserve(n_items);
  for (std::size_t i = 0; i < n_items; ++i) ids.push_back("item" + std::to_string(i + 1));
  return ids;
}

}  // namespace rasch

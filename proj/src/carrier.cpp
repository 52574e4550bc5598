#include "ternary/carrier.hpp"

#include <set>

#include "ternary/error.hpp"

namespace ternary {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

void check_entries(std::span<const Element> entries, std::size_t n, std::size_t expected,
                   const char* what) {
  if (entries.size() != expected)
    throw InputError(std::string(what) + ": expected " + std::to_string(expected) +
                     " entries, got " + std::to_string(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] >= n)
      throw InputError(std::string(what) + ": entry " + std::to_string(entries[i]) +
                       " at offset " + std::to_string(i) + " is not below order " +
                       std::to_string(n));
}

}  // namespace

Carrier::Carrier(std::size_t size) : Carrier(default_labels(size)) {}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("carrier must have at least one element");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("carrier labels must be non-empty");
    if (!seen.insert(l).second) throw InputError("duplicate carrier label '" + l + "'");
  }
}

bool Carrier::has_default_labels() const { return labels_ == default_labels(labels_.size()); }

TernaryTable::TernaryTable(Carrier carrier, std::vector<Element> cube)
    : carrier_(std::move(carrier)), n_(carrier_.size()), cube_(std::move(cube)) {
  check_entries(cube_, n_, n_ * n_ * n_, "ternary table");
}

Element TernaryTable::eval(Element x, Element y, Element z) const {
  if (x >= n_ || y >= n_ || z >= n_)
    throw InputError("ternary table lookup out of range for order " + std::to_string(n_));
  return (*this)(x, y, z);
}

BinaryTable::BinaryTable(Carrier carrier, std::vector<Element> square)
    : carrier_(std::move(carrier)), n_(carrier_.size()), square_(std::move(square)) {
  check_entries(square_, n_, n_ * n_, "binary table");
}

Element BinaryTable::eval(Element x, Element y) const {
  if (x >= n_ || y >= n_)
    throw InputError("binary table lookup out of range for order " + std::to_string(n_));
  return (*this)(x, y);
}

}  // namespace ternary

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ternary {

/// Elements are identified by their 0-based index in the carrier.
using Element = std::uint32_t;

/// A finite set of size n with display labels. Labels never affect semantics.
class Carrier {
 public:
  /// Labels default to "0", "1", ..., "n-1".
  explicit Carrier(std::size_t size);
  explicit Carrier(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  bool has_default_labels() const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A ternary operation [xyz] stored as an n*n*n cube, slot (i,j,k) at i*n*n + j*n + k.
class TernaryTable {
 public:
  TernaryTable(Carrier carrier, std::vector<Element> cube);

  /// Tabulates `op` over every triple.
  template <typename Op>
  static TernaryTable from_function(Carrier carrier, Op&& op) {
    const std::size_t n = carrier.size();
    std::vector<Element> cube;
    cube.reserve(n * n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) cube.push_back(static_cast<Element>(op(x, y, z)));
    return TernaryTable(std::move(carrier), std::move(cube));
  }

  std::size_t order() const noexcept { return carrier_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }
  std::span<const Element> cube() const noexcept { return cube_; }

  /// Unchecked lookup for hot loops.
  Element operator()(Element x, Element y, Element z) const noexcept {
    return cube_[(static_cast<std::size_t>(x) * n_ + y) * n_ + z];
  }

  /// Checked lookup; throws InputError on out-of-range arguments.
  Element eval(Element x, Element y, Element z) const;

  friend bool operator==(const TernaryTable&, const TernaryTable&) = default;

 private:
  Carrier carrier_;
  std::size_t n_;
  std::vector<Element> cube_;
};

/// A binary operation x.y stored as an n*n square, slot (i,j) at i*n + j.
class BinaryTable {
 public:
  BinaryTable(Carrier carrier, std::vector<Element> square);

  template <typename Op>
  static BinaryTable from_function(Carrier carrier, Op&& op) {
    const std::size_t n = carrier.size();
    std::vector<Element> square;
    square.reserve(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) square.push_back(static_cast<Element>(op(x, y)));
    return BinaryTable(std::move(carrier), std::move(square));
  }

  std::size_t order() const noexcept { return carrier_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }
  std::span<const Element> square() const noexcept { return square_; }

  Element operator()(Element x, Element y) const noexcept {
    return square_[static_cast<std::size_t>(x) * n_ + y];
  }
  Element eval(Element x, Element y) const;

  friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

 private:
  Carrier carrier_;
  std::size_t n_;
  std::vector<Element> square_;
};

/// Outcome of a decision procedure. When `holds` is false, `witness` carries the
/// lexicographically first failing argument tuple.
struct Verdict {
  bool holds = true;
  std::vector<Element> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<Element> w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return holds; }
};

}  // namespace ternary

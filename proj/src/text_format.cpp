#include "ternary/text_format.hpp"

#include <fstream>
#include <sstream>

#include "ternary/error.hpp"
#include "tokens.hpp"

namespace ternary {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 16;

struct Header {
  Carrier carrier;
  std::vector<Element> entries;
};

Header parse_table(std::string_view text, std::string_view magic, int arity) {
  detail::Tokens in(text, std::string(magic));
  in.expect(magic);
  in.expect("1");
  in.expect("n");
  const auto n = in.number();
  if (n == 0 || n > kMaxOrder) in.fail("order must be in [1, 65536]");

  std::vector<std::string> labels;
  if (in.peek() == "labels") {
    in.next();
    for (std::uint64_t i = 0; i < n; ++i) labels.emplace_back(in.next());
  }
  Carrier carrier = labels.empty() ? Carrier(n) : Carrier(std::move(labels));

  std::size_t count = 1;
  for (int i = 0; i < arity; ++i) count *= n;
  std::vector<Element> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (in.at_end())
      in.fail("expected " + std::to_string(count) + " entries, got " + std::to_string(i));
    const auto v = in.number();
    if (v >= n) in.fail("entry " + std::to_string(v) + " out of range for order " + std::to_string(n));
    entries.push_back(static_cast<Element>(v));
  }
  in.expect_end();
  return {std::move(carrier), std::move(entries)};
}

void write_header(std::ostringstream& out, std::string_view magic, const Carrier& c) {
  out << magic << " 1\n" << "n " << c.size() << '\n';
  if (!c.has_default_labels()) {
    out << "labels";
    for (const auto& l : c.labels()) out << ' ' << l;
    out << '\n';
  }
}

void write_rows(std::ostringstream& out, std::span<const Element> entries, std::size_t n) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << entries[i];
    out << ((i + 1) % n == 0 ? '\n' : ' ');
  }
}

}  // namespace

TernaryTable parse_tcube(std::string_view text) {
  auto h = parse_table(text, "tcube", 3);
  return TernaryTable(std::move(h.carrier), std::move(h.entries));
}

std::string write_tcube(const TernaryTable& t) {
  std::ostringstream out;
  write_header(out, "tcube", t.carrier());
  write_rows(out, t.cube(), t.order());
  return out.str();
}

BinaryTable parse_bsq(std::string_view text) {
  auto h = parse_table(text, "bsq", 2);
  return BinaryTable(std::move(h.carrier), std::move(h.entries));
}

std::string write_bsq(const BinaryTable& b) {
  std::ostringstream out;
  write_header(out, "bsq", b.carrier());
  write_rows(out, b.square(), b.order());
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path.string() + "'");
}

}  // namespace ternary

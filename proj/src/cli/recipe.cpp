#include <cctype>
#include <charconv>
#include <fstream>

#include "scar/cli.hpp"

namespace scar::cli {
namespace {

class RecipeParser {
 public:
  RecipeParser(std::string_view text, const std::filesystem::path& base) : text_(text), base_(base) {}

  Graph parse_all() {
    Graph g = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  Graph parse() {
    if (consume("leaf(")) {
      Graph g = parse();
      expect(',');
      int v = integer();
      expect(')');
      return attach_leaf(g, v);
    }
    if (consume("bridge(")) {
      Graph g = parse();
      expect(',');
      int u = integer();
      expect(',');
      Graph h = parse();
      expect(',');
      int w = integer();
      expect(')');
      return bridge(g, u, h, w);
    }
    if (consume("file:")) {
      std::size_t end = text_.find_first_of(",)", pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::filesystem::path path(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      if (path.is_relative()) path = base_ / path;
      std::ifstream in(path);
      if (!in) throw GraphError(GraphError::Kind::kMalformed, "cannot open graph file " + path.string());
      return parse_edge_list(in);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a graph name");
    std::string name(text_.substr(start, pos_ - start));
    std::optional<int> k;
    if (consume(":")) k = integer();
    return builtin(name, k);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw GraphError(GraphError::Kind::kMalformed,
                     "graph recipe '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::filesystem::path base_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph resolve_graph_recipe(std::string_view recipe, const std::filesystem::path& base_dir) {
  return RecipeParser(recipe, base_dir).parse_all();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view item = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (item.empty()) throw ValidationError("empty item in rational list '" + std::string(text) + "'");
    out.push_back(Rational::parse(item));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::uint64_t content_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace scar::cli

#include "bsaks/text_format.hpp"

#include <fstream>
#include <sstream>

#include "bsaks/error.hpp"

namespace bsaks {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Parser {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;

  TextBlock block(bool nested) {
    TextBlock out;
    while (pos < lines.size()) {
      const std::size_t line_no = pos + 1;
      std::string_view line = lines[pos++];
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line == "}") {
        if (!nested) throw Error(ErrorCode::kParse, "unbalanced '}' on line " + std::to_string(line_no));
        return out;
      }
      if (line.back() == '{') {
        std::string key(trim(line.substr(0, line.size() - 1)));
        if (key.empty()) throw Error(ErrorCode::kParse, "block without a name on line " + std::to_string(line_no));
        out.children.emplace_back(std::move(key), block(true));
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::kParse, "expected 'key = value' on line " + std::to_string(line_no));
      }
      std::string key(trim(line.substr(0, eq)));
      if (key.empty()) throw Error(ErrorCode::kParse, "empty key on line " + std::to_string(line_no));
      out.values.emplace_back(std::move(key), std::string(trim(line.substr(eq + 1))));
    }
    if (nested) throw Error(ErrorCode::kParse, "unterminated block");
    return out;
  }
};

}  // namespace

std::optional<std::string> TextBlock::get(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string TextBlock::require(std::string_view key) const {
  if (auto v = get(key)) return *v;
  throw Error(ErrorCode::kParse, "missing key '" + std::string(key) + "'");
}

const TextBlock* TextBlock::child(std::string_view key) const {
  for (const auto& [k, b] : children) {
    if (k == key) return &b;
  }
  return nullptr;
}

std::vector<const TextBlock*> TextBlock::children_named(std::string_view key) const {
  std::vector<const TextBlock*> out;
  for (const auto& [k, b] : children) {
    if (k == key) out.push_back(&b);
  }
  return out;
}

TextBlock& TextBlock::set(std::string key, std::string value) {
  values.emplace_back(std::move(key), std::move(value));
  return *this;
}

TextBlock& TextBlock::add_child(std::string key, TextBlock block) {
  children.emplace_back(std::move(key), std::move(block));
  return *this;
}

TextBlock parse_text(std::string_view text) {
  Parser p;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      p.lines.push_back(text.substr(start));
      break;
    }
    p.lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return p.block(false);
}

TextBlock read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

std::string format_text(const TextBlock& block, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string out;
  for (const auto& [k, v] : block.values) out += pad + k + " = " + v + "\n";
  for (const auto& [k, b] : block.children) {
    out += pad + k + " {\n";
    out += format_text(b, indent + 1);
    out += pad + "}\n";
  }
  return out;
}

}  // namespace bsaks
